#include "schubertq/jsonio.hpp"

#include <cstdio>
#include <stdexcept>

namespace schubertq {

Json& Json::set(const std::string& key, Json value) {
    if (!is_object()) throw std::logic_error("Json::set on non-object");
    std::get<Object>(v_).emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (!is_array()) throw std::logic_error("Json::push on non-array");
    std::get<Array>(v_).push_back(std::move(value));
    return *this;
}

std::string Json::format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
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
    out += '"';
}

void add_indent(std::string& out, int indent) { out.append(static_cast<size_t>(indent) * 2, ' '); }

}  // namespace

void Json::write(std::string& out, int indent, bool pretty) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&v_)) {
        out += *b ? "true" : "false";
    } else if (const double* d = std::get_if<double>(&v_)) {
        out += format_double(*d);
    } else if (const std::string* s = std::get_if<std::string>(&v_)) {
        write_escaped(out, *s);
    } else if (const Array* a = std::get_if<Array>(&v_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (size_t i = 0; i < a->size(); ++i) {
            if (i) out += ',';
            if (pretty) {
                out += '\n';
                add_indent(out, indent + 1);
            }
            (*a)[i].write(out, indent + 1, pretty);
        }
        if (pretty) {
            out += '\n';
            add_indent(out, indent);
        }
        out += ']';
    } else {
        const Object& o = std::get<Object>(v_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (size_t i = 0; i < o.size(); ++i) {
            if (i) out += ',';
            if (pretty) {
                out += '\n';
                add_indent(out, indent + 1);
            }
            write_escaped(out, o[i].first);
            out += pretty ? ": " : ":";
            o[i].second.write(out, indent + 1, pretty);
        }
        if (pretty) {
            out += '\n';
            add_indent(out, indent);
        }
        out += '}';
    }
}

std::string Json::dump() const {
    std::string out;
    write(out, 0, false);
    return out;
}

std::string Json::pretty() const {
    std::string out;
    write(out, 0, true);
    out += '\n';
    return out;
}

}  // namespace schubertq
