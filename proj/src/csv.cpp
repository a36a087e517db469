#include "authornet/csv.hpp"

#include <istream>

namespace authornet::csv {

bool Reader::next(Record& out) {
    out.fields.clear();
    out.line = line_;

    int c = in_.get();
    if (c == std::istream::traits_type::eof()) return false;

    std::string field;
    bool in_quotes = false;
    bool any = false;
    bool bare_cr = false;  // trailing '\r' seen outside quotes (CRLF endings)

    auto end_field = [&] {
        out.fields.push_back(field);
        field.clear();
    };

    while (true) {
        if (c == std::istream::traits_type::eof()) {
            end_field();
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            bare_cr = false;
            if (ch == '"') {
                int peek = in_.peek();
                if (peek == '"') {
                    field.push_back('"');
                    in_.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty() && !any) {
            in_quotes = true;
            any = true;
            bare_cr = false;
        } else if (ch == ',') {
            end_field();
            any = false;
            bare_cr = false;
        } else if (ch == '\n') {
            ++line_;
            if (bare_cr) field.pop_back();
            end_field();
            return true;
        } else {
            field.push_back(ch);
            any = true;
            bare_cr = ch == '\r';
        }
        c = in_.get();
    }
}

std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace authornet::csv
