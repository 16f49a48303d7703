#include "dualvar/catalog.hpp"

#include <sstream>
#include <vector>

#include "dualvar/errors.hpp"
#include "dualvar/models.hpp"

namespace dualvar {

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_small_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw parse_error("missing " + what + " in catalog name");
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad " + what + " in catalog name: '" + s + "'");
    }
    if (pos != s.size()) throw parse_error("bad " + what + " in catalog name: '" + s + "'");
    return v;
}

} // namespace

bool is_catalog_name(const std::string& spec) {
    auto parts = split_on(spec, ':');
    const std::string& head = parts[0];
    return head == "det" || head == "perm" || head == "padded" || head == "plambda" ||
           head == "immanant";
}

CatalogPoly resolve_catalog(const std::string& spec) {
    auto parts = split_on(spec, ':');
    const std::string& head = parts[0];
    if (head == "det") {
        if (parts.size() != 2) throw parse_error("expected det:n");
        int n = parse_small_int(parts[1], "size");
        return {det_poly(n), "det:" + std::to_string(n)};
    }
    if (head == "perm") {
        if (parts.size() != 2) throw parse_error("expected perm:m");
        int m = parse_small_int(parts[1], "size");
        return {perm_poly(m), "perm:" + std::to_string(m)};
    }
    if (head == "padded") {
        if (parts.size() != 4 || parts[1] != "perm")
            throw parse_error("expected padded:perm:m:d");
        int m = parse_small_int(parts[2], "size");
        int d = parse_small_int(parts[3], "degree");
        PaddedPoly pp = padded_poly(perm_poly(m), d);
        return {pp.padded, "padded:perm:" + std::to_string(m) + ":" + std::to_string(d)};
    }
    if (head == "plambda") {
        if (parts.size() != 2) throw parse_error("expected plambda:n");
        int n = parse_small_int(parts[1], "size");
        PLambdaResult r = p_lambda(n);
        if (r.even_warning) throw invalid_input_error("boundary polynomial vanishes for even sizes");
        return {r.poly, "plambda:" + std::to_string(n)};
    }
    if (head == "immanant") {
        if (parts.size() != 2) throw parse_error("expected immanant:p1,p2,...");
        std::vector<int> ps;
        for (const auto& tok : split_on(parts[1], ','))
            ps.push_back(parse_small_int(tok, "partition part"));
        Partition lambda(ps);
        return {immanant_poly(lambda), "immanant:" + parts[1]};
    }
    throw parse_error("unknown catalog name '" + spec + "'");
}

} // namespace dualvar
