// Ordered variable lists. The order is fixed at construction and defines the
// monomial order used everywhere (lexicographic on exponent vectors).
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hlv/error.hpp"

namespace hlv {

class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            auto [it, fresh] = index_.emplace(names_[i], i);
            if (!fresh) throw Error("duplicate variable name: " + names_[i]);
        }
    }

    // q, t, s (formal square root slot for q), u.
    static std::shared_ptr<const VarSet> core() {
        return std::make_shared<const VarSet>(std::vector<std::string>{"q", "t", "s", "u"});
    }

    // core plus sigma1..sigma<g>
    static std::shared_ptr<const VarSet> with_sigmas(int g) {
        std::vector<std::string> n{"q", "t", "s", "u"};
        for (int i = 1; i <= g; ++i) n.push_back("sigma" + std::to_string(i));
        return std::make_shared<const VarSet>(std::move(n));
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    size_t index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw Error("unknown variable: " + name);
        return it->second;
    }
    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline void check_same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw Error("operands live in different variable sets");
}

} // namespace hlv
