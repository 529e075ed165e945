#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfd/dfd.hpp"

namespace dfd::cli {

enum ExitStatus : int {
    kClean = 0,
    kFindings = 1,
    kFailure = 2,  // bad usage, unreadable input, parse errors
};

namespace detail {

inline std::optional<Project> load(const std::string& path, const std::string& format_in, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "dfdlint: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::string format = format_in;
    if (format.empty()) format = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? "json" : "dfd";
    auto parsed = format == "json" ? dsl::from_json(text) : dsl::parse_project(text);
    if (!parsed) {
        for (const auto& e : parsed.errors()) err << path << ":" << dsl::format(e) << "\n";
        return std::nullopt;
    }
    return std::move(parsed).value();
}

}  // namespace detail

/// `validate`: parse, run every check, print the report. Exit 1 on any
/// error, or on any warning under --strict.
inline int cmd_validate(const std::string& path, const std::string& format, bool strict, const std::string& format_in,
                        std::ostream& out, std::ostream& err) {
    auto project = detail::load(path, format_in, err);
    if (!project) return kFailure;
    const Diagnostics diags = check_project(*project);
    out << (format == "text" ? render_text(diags, project->size()) : render_structured(diags));
    const std::size_t errors = count_errors(diags);
    if (errors > 0 || (strict && diags.size() > errors)) return kFindings;
    return kClean;
}

inline int cmd_export_dot(const std::string& path, const std::string& out_path, const std::string& format_in,
                          std::ostream& err) {
    auto project = detail::load(path, format_in, err);
    if (!project) return kFailure;
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "dfdlint: cannot write '" << out_path << "'\n";
        return kFailure;
    }
    file << export_dot(*project);
    if (!file.flush()) {
        err << "dfdlint: cannot write '" << out_path << "'\n";
        return kFailure;
    }
    return kClean;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Data flow diagram linter: syntax rules and level balancing", "dfdlint"};
    app.require_subcommand(1);

    std::string path, format = "text", format_in, out_path;
    bool strict = false, dot = false;

    auto* validate = app.add_subcommand("validate", "Check a project and print the diagnostics");
    validate->add_option("file", path, "Project file (.dfd, or .json)")->required();
    validate->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "structured", "json"}));
    validate->add_flag("--strict", strict, "Treat warnings as failures");
    validate->add_option("--format-in", format_in, "Input format, overriding the file extension")
        ->check(CLI::IsMember({"dfd", "json"}));

    auto* exporter = app.add_subcommand("export", "Write the project as Graphviz graphs");
    exporter->add_option("file", path, "Project file (.dfd, or .json)")->required();
    exporter->add_flag("--dot", dot, "Graphviz dot output")->required();
    exporter->add_option("-o,--output", out_path, "Output file")->required();
    exporter->add_option("--format-in", format_in, "Input format, overriding the file extension")
        ->check(CLI::IsMember({"dfd", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kClean : kFailure;
    }

    if (*validate) return cmd_validate(path, format == "text" ? "text" : "structured", strict, format_in, out, err);
    return cmd_export_dot(path, out_path, format_in, err);
}

}  // namespace dfd::cli
