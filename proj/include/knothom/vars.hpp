#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace knothom {

// Interned polynomial variables. Names follow the I/O grammar: U<i>, V<i>,
// W<i>_<j>, single letters a, q, t, x, y, z. Ordering is structural
// (letter part, then numeric suffixes compared as integers) so that the
// canonical monomial order does not depend on interning order.
using VarId = int32_t;

class VarTable {
  public:
    static VarTable& instance() {
        static VarTable tbl;
        return tbl;
    }

    VarId intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_name_.find(name);
        if (it != by_name_.end()) return it->second;
        VarId id = static_cast<VarId>(names_.size());
        names_.push_back(name);
        keys_.push_back(sort_key(name));
        by_name_.emplace(name, id);
        return id;
    }

    const std::string& name(VarId id) const { return names_.at(static_cast<size_t>(id)); }

    // Structural order: ("U",1) < ("U",2) < ("U",10) < ("V",1) < ("a")
    bool less(VarId a, VarId b) const {
        return keys_[static_cast<size_t>(a)] < keys_[static_cast<size_t>(b)];
    }

  private:
    using Key = std::pair<std::string, std::vector<long>>;

    static Key sort_key(const std::string& name) {
        Key k;
        size_t i = 0;
        while (i < name.size() && !isdigit(static_cast<unsigned char>(name[i]))) k.first += name[i++];
        while (i < name.size()) {
            if (name[i] == '_') { i++; continue; }
            long v = 0;
            if (!isdigit(static_cast<unsigned char>(name[i]))) throw std::invalid_argument("bad variable name: " + name);
            while (i < name.size() && isdigit(static_cast<unsigned char>(name[i]))) v = v * 10 + (name[i++] - '0');
            k.second.push_back(v);
        }
        return k;
    }

    std::mutex mu_;
    std::vector<std::string> names_;
    std::vector<Key> keys_;
    std::map<std::string, VarId> by_name_;
};

inline VarId var(const std::string& name) { return VarTable::instance().intern(name); }
inline const std::string& var_name(VarId id) { return VarTable::instance().name(id); }
inline bool var_less(VarId a, VarId b) { return VarTable::instance().less(a, b); }

inline VarId var_U(int i) { return var("U" + std::to_string(i)); }
inline VarId var_V(int i) { return var("V" + std::to_string(i)); }
inline VarId var_W(int i, int j) { return var("W" + std::to_string(i) + "_" + std::to_string(j)); }

}  // namespace knothom
