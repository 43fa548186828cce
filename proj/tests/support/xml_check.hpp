// xml_check.hpp
//
// A deliberately strict well-formedness scanner for generated pages:
// balanced tags, quoted attributes, known entities, no stray angle
// brackets. Far stricter than a browser, which is the point.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace testsupport {

inline bool xml_well_formed(std::string_view doc, std::string& error) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        error = what + " at offset " + std::to_string(i);
        return false;
    };
    auto name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
    };
    auto check_entity = [&](std::size_t at) {
        std::size_t semi = doc.find(';', at);
        if (semi == std::string_view::npos || semi - at > 10) return false;
        std::string_view body = doc.substr(at + 1, semi - at - 1);
        if (body.empty()) return false;
        if (body[0] == '#') {
            for (std::size_t k = 1; k < body.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(body[k]))) return false;
            return body.size() > 1;
        }
        return body == "amp" || body == "lt" || body == "gt" || body == "quot" ||
               body == "apos";
    };

    while (i < doc.size()) {
        char c = doc[i];
        if (c == '&') {
            if (!check_entity(i)) return fail("bad entity");
            i = doc.find(';', i) + 1;
            continue;
        }
        if (c == '>') return fail("stray '>' in text");
        if (c != '<') {
            ++i;
            continue;
        }
        if (doc.compare(i, 9, "<!DOCTYPE") == 0) {
            std::size_t end = doc.find('>', i);
            if (end == std::string_view::npos) return fail("unterminated DOCTYPE");
            i = end + 1;
            continue;
        }
        if (doc.compare(i, 4, "<!--") == 0) {
            std::size_t end = doc.find("-->", i);
            if (end == std::string_view::npos) return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        if (i + 1 < doc.size() && doc[i + 1] == '/') {
            std::size_t end = doc.find('>', i);
            if (end == std::string_view::npos) return fail("unterminated closing tag");
            std::string name(doc.substr(i + 2, end - i - 2));
            if (stack.empty()) return fail("closing '" + name + "' with nothing open");
            if (stack.back() != name)
                return fail("closing '" + name + "' but '" + stack.back() + "' is open");
            stack.pop_back();
            i = end + 1;
            continue;
        }
        // opening or self-closing tag
        std::size_t j = i + 1;
        std::size_t name_start = j;
        while (j < doc.size() && name_char(doc[j])) ++j;
        if (j == name_start) return fail("empty tag name");
        std::string name(doc.substr(name_start, j - name_start));
        bool self_closing = false;
        while (true) {
            while (j < doc.size() &&
                   std::isspace(static_cast<unsigned char>(doc[j])))
                ++j;
            if (j >= doc.size()) return fail("unterminated tag '" + name + "'");
            if (doc[j] == '>') {
                ++j;
                break;
            }
            if (doc.compare(j, 2, "/>") == 0) {
                self_closing = true;
                j += 2;
                break;
            }
            // attribute name
            std::size_t attr_start = j;
            while (j < doc.size() && name_char(doc[j])) ++j;
            if (j == attr_start) return fail("bad attribute in '" + name + "'");
            if (j >= doc.size() || doc[j] != '=')
                return fail("attribute without value in '" + name + "'");
            ++j;
            if (j >= doc.size() || (doc[j] != '"' && doc[j] != '\''))
                return fail("unquoted attribute value in '" + name + "'");
            char quote = doc[j];
            std::size_t close = doc.find(quote, j + 1);
            if (close == std::string_view::npos)
                return fail("unterminated attribute value in '" + name + "'");
            std::string_view value = doc.substr(j + 1, close - j - 1);
            if (value.find('<') != std::string_view::npos)
                return fail("'<' inside attribute value of '" + name + "'");
            for (std::size_t k = 0; k < value.size(); ++k)
                if (value[k] == '&' && !check_entity(j + 1 + k))
                    return fail("bad entity in attribute of '" + name + "'");
            j = close + 1;
        }
        if (!self_closing) stack.push_back(name);
        i = j;
    }
    if (!stack.empty()) return fail("unclosed tag '" + stack.back() + "'");
    return true;
}

}  // namespace testsupport
