#pragma once

#include "dfd/consistency.hpp"
#include "dfd/diagnostic.hpp"
#include "dfd/dot.hpp"
#include "dfd/dsl/json.hpp"
#include "dfd/dsl/parser.hpp"
#include "dfd/model.hpp"
#include "dfd/render.hpp"
#include "dfd/syntax_rules.hpp"
