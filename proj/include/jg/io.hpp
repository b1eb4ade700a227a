#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jg/errors.hpp"
#include "jg/expseq.hpp"
#include "jg/group.hpp"
#include "jg/jstructure.hpp"
#include "jg/numeric.hpp"
#include "jg/padic.hpp"
#include "jg/quadratic.hpp"
#include "jg/rings.hpp"

namespace jg {

using Json = nlohmann::json;

// ---------------------------------------------------------------- literals

inline Int int_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("integer literal: empty string");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw ParseError("integer literal: sign without digits");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("integer literal: unexpected character in '" + s + "'");
    return Int(s);
}

inline std::string rat_to_string(const Rat& r) {
    Int num = rat_num(r);
    Int den = rat_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal: zero denominator in '" + s + "'");
    return Rat(num, den);
}

inline std::string quad_to_string(const QuadRat& x) {
    if (x.b == 0) return rat_to_string(x.a);
    std::string root = rat_to_string(x.b) + "*sqrt2";
    if (x.b == 1) root = "sqrt2";
    if (x.b == -1) root = "-sqrt2";
    if (x.a == 0) return root;
    if (x.b > 0) return rat_to_string(x.a) + "+" + root;
    return rat_to_string(x.a) + root;  // the root carries its own minus sign
}

// Accepts sums of at most two terms, each a rational literal or a multiple of
// sqrt2: "3/2", "sqrt2", "sqrt2/2", "-5*sqrt2/7", "1+sqrt2", "-3/2+5*sqrt2".
inline QuadRat quad_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("quadratic literal: empty string");
    std::vector<std::pair<int, std::string>> terms;  // sign, body
    int sign = +1;
    std::size_t start = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : +1;
        start = 1;
    }
    std::size_t pos = start;
    for (std::size_t i = start; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && i > pos) {
            terms.emplace_back(sign, s.substr(pos, i - pos));
            sign = s[i] == '-' ? -1 : +1;
            pos = i + 1;
        }
    }
    if (pos >= s.size()) throw ParseError("quadratic literal: trailing sign in '" + s + "'");
    terms.emplace_back(sign, s.substr(pos));
    if (terms.size() > 2) throw ParseError("quadratic literal: too many terms in '" + s + "'");

    QuadRat out{Rat(0), Rat(0)};
    for (const auto& [tsign, body] : terms) {
        std::size_t root = body.find("sqrt2");
        if (root == std::string::npos) {
            out.a += tsign * rat_from_string(body);
            continue;
        }
        Rat coeff(1);
        if (root > 0) {
            if (body[root - 1] != '*')
                throw ParseError("quadratic literal: expected '*' before sqrt2 in '" + s + "'");
            coeff = rat_from_string(body.substr(0, root - 1));
        }
        std::string tail = body.substr(root + 5);
        if (!tail.empty()) {
            if (tail[0] != '/')
                throw ParseError("quadratic literal: unexpected text after sqrt2 in '" + s + "'");
            Int den = int_from_string(tail.substr(1));
            if (den == 0) throw ParseError("quadratic literal: zero denominator in '" + s + "'");
            coeff /= Rat(den);
        }
        out.b += tsign * coeff;
    }
    return out;
}

inline std::uint32_t parse_u32(const std::string& s) {
    Int v = int_from_string(s);
    if (v < 0 || v > 0xffffffffu) throw ParseError("number out of range: '" + s + "'");
    return static_cast<std::uint32_t>(v);
}

// A non-negative integral JSON value, whether stored signed or unsigned.
inline bool json_nonneg_int(const Json& j) {
    if (j.is_number_unsigned()) return true;
    return j.is_number_integer() && j.get<std::int64_t>() >= 0;
}

// ------------------------------------------------------------------- files

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

// ------------------------------------------------------------------ groups

inline Json group_to_json(const FiniteGroup& g) {
    return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table_rows()}};
}

inline FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
        throw ParseError("group JSON: expected an object with a 'table' array");
    std::string name = j.value("name", std::string("G"));
    std::vector<std::vector<element_t>> rows;
    for (const auto& row : j["table"]) {
        if (!row.is_array()) throw ParseError("group JSON: table rows must be arrays");
        std::vector<element_t> r;
        for (const auto& cell : row) {
            if (!json_nonneg_int(cell))
                throw ParseError("group JSON: table entries must be non-negative integers");
            r.push_back(cell.get<element_t>());
        }
        rows.push_back(std::move(r));
    }
    if (j.contains("order") &&
        (!json_nonneg_int(j["order"]) || j["order"].get<std::size_t>() != rows.size()))
        throw ParseError("group JSON: 'order' does not match the table size");
    return FiniteGroup::from_table(name, rows);
}

// Grammar: cyclic:N | dihedral:N | sym:N | product:<spec>x<spec> |
// unitri:N:P | file:<path>, plus shorthand aliases Z9, D4, S3.
inline FiniteGroup group_from_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("group spec: empty string");

    if (spec.find(':') == std::string::npos && spec.size() >= 2) {
        bool digits = true;
        for (std::size_t i = 1; i < spec.size(); ++i)
            if (spec[i] < '0' || spec[i] > '9') digits = false;
        if (digits) {
            std::uint32_t n = parse_u32(spec.substr(1));
            if (spec[0] == 'Z') return make_cyclic(n);
            if (spec[0] == 'S') return make_symmetric(n);
            if (spec[0] == 'D') return make_dihedral(n);
        }
    }

    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("group spec: unknown form '" + spec + "'");
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);

    if (head == "cyclic") return make_cyclic(parse_u32(rest));
    if (head == "dihedral") return make_dihedral(parse_u32(rest));
    if (head == "sym") return make_symmetric(parse_u32(rest));
    if (head == "unitri") {
        std::size_t c2 = rest.find(':');
        if (c2 == std::string::npos)
            throw ParseError("group spec: unitri needs dimension and prime, as unitri:N:P");
        return make_unitriangular_mod(parse_u32(rest.substr(0, c2)),
                                      parse_u32(rest.substr(c2 + 1)));
    }
    if (head == "file") return group_from_json(read_json_file(rest));
    if (head == "product") {
        // try every split point 'x'; specs themselves may contain 'x'
        for (std::size_t i = rest.find('x'); i != std::string::npos; i = rest.find('x', i + 1)) {
            try {
                FiniteGroup a = group_from_spec(rest.substr(0, i));
                FiniteGroup b = group_from_spec(rest.substr(i + 1));
                return make_direct_product(a, b);
            } catch (const Error&) {
                continue;
            }
        }
        throw ParseError("group spec: no valid product split in '" + rest + "'");
    }
    throw ParseError("group spec: unknown form '" + spec + "'");
}

// -------------------------------------------------------------- structures

inline Variant variant_from_name(const std::string& s) {
    if (s == "J1") return Variant::J1;
    if (s == "J2") return Variant::J2;
    if (s == "J3") return Variant::J3;
    if (s == "J4") return Variant::J4;
    throw ParseError("variant: expected J1, J2, J3, or J4, got '" + s + "'");
}

inline Json structure_to_json(const JStructure& s) {
    return Json{{"group", group_to_json(*s.group)},
                {"witness", s.witness},
                {"fmap", s.fmap},
                {"variant", variant_name(s.variant)},
                {"verified", s.verified}};
}

inline JStructure structure_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("structure JSON: expected an object");
    if (!j.contains("group")) throw ParseError("structure JSON: missing 'group'");
    JStructure s;
    if (j["group"].is_string())
        s.group = share(group_from_spec(j["group"].get<std::string>()));
    else
        s.group = share(group_from_json(j["group"]));
    if (!j.contains("witness") || !json_nonneg_int(j["witness"]))
        throw ParseError("structure JSON: 'witness' must be a non-negative integer");
    s.witness = j["witness"].get<element_t>();
    if (!j.contains("fmap") || !j["fmap"].is_array())
        throw ParseError("structure JSON: 'fmap' must be an array");
    for (const auto& v : j["fmap"]) {
        if (!json_nonneg_int(v))
            throw ParseError("structure JSON: 'fmap' entries must be non-negative integers");
        s.fmap.push_back(v.get<element_t>());
    }
    if (j.contains("variant")) {
        if (!j["variant"].is_string())
            throw ParseError("structure JSON: 'variant' must be a string");
        s.variant = variant_from_name(j["variant"].get<std::string>());
    }
    return s;
}

// ------------------------------------------------------------ p-adic JSON

inline Json padic_to_json(const TruncatedPAdicInt& x) {
    return Json{{"p", x.prime()}, {"precision", x.precision()}, {"residue", x.residue().str()}};
}

inline TruncatedPAdicInt padic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("precision") || !j.contains("residue"))
        throw ParseError("p-adic JSON: expected an object with p, precision, residue");
    if (!json_nonneg_int(j["p"]) || !json_nonneg_int(j["precision"]))
        throw ParseError("p-adic JSON: p and precision must be non-negative integers");
    Int residue;
    if (j["residue"].is_string())
        residue = int_from_string(j["residue"].get<std::string>());
    else if (j["residue"].is_number_integer())
        residue = Int(j["residue"].get<std::int64_t>());
    else
        throw ParseError("p-adic JSON: residue must be a decimal string or integer");
    return TruncatedPAdicInt(j["p"].get<std::uint32_t>(), j["precision"].get<std::uint32_t>(),
                             residue);
}

// ------------------------------------------------- small CLI-facing specs

// "geometric:B[:len]" (default 10 terms) or "constant:V[:len]" (default 8).
inline ExponentSequence sequence_from_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("sequence spec: expected geometric:B or constant:V");
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::size_t c2 = rest.find(':');
    std::string value = c2 == std::string::npos ? rest : rest.substr(0, c2);
    std::size_t length = head == "geometric" ? 10 : 8;
    if (c2 != std::string::npos) {
        length = parse_u32(rest.substr(c2 + 1));
        if (length == 0 || length > 64)
            throw ParseError("sequence spec: length must be between 1 and 64");
    }
    Int v = int_from_string(value);
    if (head == "geometric") {
        if (v == 0 || v == 1 || v == -1)
            throw ParseError("sequence spec: geometric base must have magnitude >= 2");
        return ExponentSequence::geometric(v, length);
    }
    if (head == "constant") return ExponentSequence::constant(v, length);
    throw ParseError("sequence spec: unknown form '" + head + "'");
}

// "1ms", "2.5s", "500us", "1m", or a bare number of seconds.
inline double duration_seconds(const std::string& s) {
    if (s.empty()) throw ParseError("duration: empty string");
    double scale = 1.0;
    std::string digits = s;
    auto ends_with = [&](const char* suffix) {
        std::string suf(suffix);
        return s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends_with("us")) {
        scale = 1e-6;
        digits = s.substr(0, s.size() - 2);
    } else if (ends_with("ms")) {
        scale = 1e-3;
        digits = s.substr(0, s.size() - 2);
    } else if (ends_with("s")) {
        digits = s.substr(0, s.size() - 1);
    } else if (ends_with("m")) {
        scale = 60.0;
        digits = s.substr(0, s.size() - 1);
    }
    try {
        std::size_t used = 0;
        double v = std::stod(digits, &used);
        if (used != digits.size() || v < 0)
            throw ParseError("duration: invalid value '" + s + "'");
        return v * scale;
    } catch (const std::logic_error&) {
        throw ParseError("duration: invalid value '" + s + "'");
    }
}

// "p:N" for a truncated p-adic ring.
inline std::pair<std::uint32_t, std::uint32_t> padic_spec_from_string(const std::string& s) {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("p-adic spec: expected p:precision, got '" + s + "'");
    return {parse_u32(s.substr(0, colon)), parse_u32(s.substr(colon + 1))};
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

// "3:2:1,5:1:2" -> factors Z/p^i with multiplicities.
inline std::vector<TorsionFactor> torsion_from_spec(const std::string& s) {
    std::vector<TorsionFactor> out;
    if (s.empty()) return out;
    for (const std::string& part : split_on(s, ',')) {
        auto bits = split_on(part, ':');
        if (bits.size() != 3)
            throw ParseError("torsion spec: expected p:i:multiplicity, got '" + part + "'");
        out.push_back({parse_u32(bits[0]), parse_u32(bits[1]), parse_u32(bits[2])});
    }
    return out;
}

// "2:1,3:2" -> Z_p factors with multiplicities.
inline std::vector<FreeFactor> free_from_spec(const std::string& s) {
    std::vector<FreeFactor> out;
    if (s.empty()) return out;
    for (const std::string& part : split_on(s, ',')) {
        auto bits = split_on(part, ':');
        if (bits.size() != 2)
            throw ParseError("free-part spec: expected p:multiplicity, got '" + part + "'");
        out.push_back({parse_u32(bits[0]), parse_u32(bits[1])});
    }
    return out;
}

// "E14" (1-based row/column) names an elementary matrix.
inline std::pair<std::uint32_t, std::uint32_t> elementary_from_spec(const std::string& s,
                                                                    std::uint32_t dim) {
    if (s.size() != 3 || s[0] != 'E' || s[1] < '1' || s[1] > '8' || s[2] < '1' || s[2] > '8')
        throw ParseError("matrix spec: expected Eij with 1-based digits, got '" + s + "'");
    std::uint32_t i = static_cast<std::uint32_t>(s[1] - '1');
    std::uint32_t j = static_cast<std::uint32_t>(s[2] - '1');
    if (i >= j || j >= dim)
        throw ParseError("matrix spec: '" + s + "' is not strictly upper triangular in dimension " +
                         std::to_string(dim));
    return {i, j};
}

}  // namespace jg
