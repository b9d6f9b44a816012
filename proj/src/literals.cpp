#include "sxp/literals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sxp {

std::string to_literal(const Partition& p) {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < p.rows(); ++i) {
        if (i) out << ',';
        out << p.part(i);
    }
    out << ']';
    return out.str();
}

std::string to_literal(const SkewShape& s) {
    if (s.inner().empty()) return to_literal(s.outer());
    return to_literal(s.outer()) + "/" + to_literal(s.inner());
}

namespace {

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

} // namespace

Partition partition_from_literal(const std::string& text) {
    std::string t = strip_spaces(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw parse_error("partition literal must look like [3,2] or []: got '" + text + "'");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw parse_error("bad partition part '" + item + "' in '" + text + "'");
            parts.push_back(std::stoi(item));
        }
        if (body.back() == ',') throw parse_error("trailing comma in '" + text + "'");
    }
    try {
        return Partition(std::move(parts));
    } catch (const error& e) {
        throw parse_error(std::string(e.what()) + " in '" + text + "'");
    }
}

SkewShape skew_from_literal(const std::string& text) {
    std::string t = strip_spaces(text);
    std::size_t slash = t.find('/');
    if (slash == std::string::npos) return skew(partition_from_literal(t));
    Partition outer = partition_from_literal(t.substr(0, slash));
    Partition inner = partition_from_literal(t.substr(slash + 1));
    return SkewShape(std::move(outer), std::move(inner));
}

std::vector<std::pair<Partition, Int>> ordered_terms(const SchurExpansion& e) {
    std::vector<std::pair<Partition, Int>> out(e.terms().begin(), e.terms().end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return b.first < a.first;   // descending lexicographic
    });
    return out;
}

} // namespace sxp
