#include "hlv/textio.hpp"

#include <sstream>

namespace hlv {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string monomial_str(const VarSetPtr& vars, const ExpVec& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars->name(i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

bool is_plain_one(const Rat& r) { return r == 1; }

} // namespace

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_str(p.vars(), e);
        if (mono.empty()) {
            out += rat_str(mag);
        } else if (is_plain_one(mag)) {
            out += mono;
        } else {
            out += rat_str(mag) + "*" + mono;
        }
    }
    return out;
}

std::string to_text(const Scalar& s) {
    std::string num = to_text(s.num());
    if (s.den().is_constant() && !s.den().is_zero() && s.den().leading().second == 1) return num;
    std::string den = to_text(s.den());
    if (s.num().term_count() > 1) num = "(" + num + ")";
    if (s.den().term_count() > 1) den = "(" + den + ")";
    return num + "/" + den;
}

std::string to_text(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

namespace {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::h: return 'h';
        case Basis::e: return 'e';
        case Basis::p: return 'p';
        case Basis::s: return 's';
    }
    return '?';
}

// coefficient prefix: "" for 1, "(...)*" when the scalar needs guarding
std::string coeff_prefix(const Scalar& c) {
    if (c.is_one()) return "";
    std::string s = to_text(c);
    bool bare = s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos &&
                s.find('/') == std::string::npos;
    if (!bare) s = "(" + s + ")";
    return s + "*";
}

} // namespace

std::string to_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    char b = basis_letter(f.basis());
    bool first = true;
    for (auto& [la, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        out += coeff_prefix(c) + b + "[" + to_text(la) + "]";
    }
    return out;
}

std::string to_text(const TensorSym& t) {
    if (t.is_zero()) return "0";
    std::string out;
    char b = basis_letter(t.basis());
    bool first = true;
    for (auto& [tu, c] : t.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string factors;
        for (size_t i = 0; i < tu.size(); ++i) {
            if (tu[i].empty()) continue; // unit factor
            if (!factors.empty()) factors += "*";
            factors += std::string(1, b) + "[" + to_text(tu[i]) + "]";
            if (tu.size() > 1) factors += "(X" + std::to_string(i + 1) + ")";
        }
        if (factors.empty()) factors = "1";
        std::string pre = coeff_prefix(c);
        if (pre.empty() && factors == "1") out += "1";
        else out += pre + factors;
    }
    return out;
}

std::string to_text(const MultiSymSeries& s) {
    std::string out;
    for (int n = 0; n <= s.nmax(); ++n) {
        TensorSym c = s.at(n);
        out += "T^" + std::to_string(n) + ": " + to_text(c) + "\n";
    }
    return out;
}

namespace {
nlohmann::json poly_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({{"c", rat_str(c)}, {"e", e}});
    return terms;
}
} // namespace

nlohmann::json to_json(const Scalar& s) {
    return {{"vars", s.vars()->names()}, {"num", poly_json(s.num())}, {"den", poly_json(s.den())}};
}

nlohmann::json to_json(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [la, c] : f.terms()) terms.push_back({{"mu", la.parts()}, {"coeff", to_json(c)}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

nlohmann::json to_json(const MultiSymSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [n, c] : s.coefficients()) {
        for (auto& [tu, coeff] : c.terms()) {
            nlohmann::json tuple = nlohmann::json::array();
            for (auto& la : tu) tuple.push_back(la.parts());
            out.push_back({{"T", n}, {"tuple", tuple}, {"coeff", to_json(coeff)}});
        }
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> parse_mults(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) r.push_back(std::stoi(item));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace hlv
