#include "vw/json_writer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vw {

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        // JSON has no inf/nan; report results should never contain them.
        throw std::invalid_argument("format_number: non-finite value");
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

Json& Json::set(const std::string& key, Json value) {
    if (!is_object()) throw std::logic_error("Json::set on non-object");
    auto& obj = std::get<Object>(value_);
    for (auto& [k, v] : obj) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    obj.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (!is_array()) throw std::logic_error("Json::push on non-array");
    std::get<Array>(value_).push_back(std::move(value));
    return *this;
}

const Json* Json::find(const std::string& key) const {
    if (!is_object()) return nullptr;
    for (const auto& [k, v] : std::get<Object>(value_))
        if (k == key) return &v;
    return nullptr;
}

double Json::as_number() const {
    if (auto* d = std::get_if<double>(&value_)) return *d;
    if (auto* i = std::get_if<std::int64_t>(&value_)) return static_cast<double>(*i);
    throw std::logic_error("Json::as_number on non-number");
}

std::int64_t Json::as_int() const {
    if (auto* i = std::get_if<std::int64_t>(&value_)) return *i;
    throw std::logic_error("Json::as_int on non-integer");
}

const std::string& Json::as_string() const {
    if (auto* s = std::get_if<std::string>(&value_)) return *s;
    throw std::logic_error("Json::as_string on non-string");
}

bool Json::as_bool() const {
    if (auto* b = std::get_if<bool>(&value_)) return *b;
    throw std::logic_error("Json::as_bool on non-bool");
}

namespace {

void newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (auto* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (auto* i = std::get_if<std::int64_t>(&value_)) {
        out += std::to_string(*i);
    } else if (auto* d = std::get_if<double>(&value_)) {
        out += format_number(*d);
    } else if (auto* s = std::get_if<std::string>(&value_)) {
        out += '"';
        out += json_escape(*s);
        out += '"';
    } else if (auto* a = std::get_if<Array>(&value_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& v : *a) {
            if (!first) out += ',';
            first = false;
            newline_indent(out, indent, depth + 1);
            v.write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += ']';
    } else {
        const auto& obj = std::get<Object>(value_);
        if (obj.empty()) {
            out += "{}";
            return;
        }
        std::vector<const std::pair<std::string, Json>*> sorted;
        sorted.reserve(obj.size());
        for (const auto& kv : obj) sorted.push_back(&kv);
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const auto* x, const auto* y) { return x->first < y->first; });
        out += '{';
        bool first = true;
        for (const auto* kv : sorted) {
            if (!first) out += ',';
            first = false;
            newline_indent(out, indent, depth + 1);
            out += '"';
            out += json_escape(kv->first);
            out += "\":";
            if (indent > 0) out += ' ';
            kv->second.write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += '}';
    }
}

std::string Json::dump() const {
    std::string out;
    write(out, 0, 0);
    return out;
}

std::string Json::pretty() const {
    std::string out;
    write(out, 2, 0);
    return out;
}

}  // namespace vw
