#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "dfd/error.hpp"

namespace dfd {

namespace detail {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string collapse_whitespace(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

inline std::string nfc(std::string_view utf8) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return std::string(utf8);
    icu::UnicodeString text = icu::UnicodeString::fromUTF8(
        icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    icu::UnicodeString composed = normalizer->normalize(text, status);
    if (U_FAILURE(status)) return std::string(utf8);
    std::string out;
    composed.toUTF8String(out);
    return out;
}

}  // namespace detail

class Name;
Name normalize_name(std::string_view raw);

/// A normalized, non-empty element name. Comparison is exact and
/// case-sensitive on the normalized form.
class Name {
public:
    const std::string& str() const noexcept { return value_; }

    friend bool operator==(const Name&, const Name&) = default;
    friend std::strong_ordering operator<=>(const Name&, const Name&) = default;

private:
    explicit Name(std::string value) : value_(std::move(value)) {}
    friend Name normalize_name(std::string_view raw);

    std::string value_;
};

/// NFC composition, then trim and collapse internal whitespace runs.
inline Name normalize_name(std::string_view raw) {
    std::string value = detail::collapse_whitespace(detail::nfc(raw));
    if (value.empty()) throw Error(ErrorKind::EmptyName, "name is empty after normalization");
    return Name(std::move(value));
}

/// Dotted-decimal process number such as "0", "2" or "2.3".
///
/// Each segment is "0" or a decimal without leading zeros. Ordering is
/// numeric segment by segment, so "2" < "2.1" < "10".
class ProcessId {
public:
    static std::optional<ProcessId> parse(std::string_view text) {
        if (text.empty()) return std::nullopt;
        std::vector<std::string> segments;
        std::size_t start = 0;
        while (true) {
            std::size_t dot = text.find('.', start);
            std::string_view seg = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
            if (seg.empty()) return std::nullopt;
            for (char c : seg)
                if (c < '0' || c > '9') return std::nullopt;
            if (seg.size() > 1 && seg.front() == '0') return std::nullopt;
            segments.emplace_back(seg);
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return ProcessId(std::string(text), std::move(segments));
    }

    static ProcessId from(std::string_view text) {
        auto id = parse(text);
        if (!id) throw Error(ErrorKind::InvalidProcessId, "invalid process number '" + std::string(text) + "'");
        return *id;
    }

    static ProcessId root() { return from("0"); }

    const std::string& str() const noexcept { return text_; }
    const std::vector<std::string>& segments() const noexcept { return segments_; }
    std::size_t depth() const noexcept { return segments_.size(); }
    bool is_root() const noexcept { return text_ == "0"; }

    /// True when this id is `other` followed by one or more further segments.
    bool is_descendant_of(const ProcessId& other) const {
        return text_.size() > other.text_.size() && text_.compare(0, other.text_.size(), other.text_) == 0 &&
               text_[other.text_.size()] == '.';
    }

    friend bool operator==(const ProcessId& a, const ProcessId& b) { return a.text_ == b.text_; }

    friend std::strong_ordering operator<=>(const ProcessId& a, const ProcessId& b) {
        const std::size_t n = std::min(a.segments_.size(), b.segments_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& x = a.segments_[i];
            const std::string& y = b.segments_[i];
            if (auto c = x.size() <=> y.size(); c != 0) return c;
            if (auto c = x.compare(y) <=> 0; c != 0) return c;
        }
        return a.segments_.size() <=> b.segments_.size();
    }

private:
    ProcessId(std::string text, std::vector<std::string> segments)
        : text_(std::move(text)), segments_(std::move(segments)) {}

    std::string text_;
    std::vector<std::string> segments_;
};

}  // namespace dfd
