#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by substitution when the denominator genuinely vanishes.
struct PoleError : Error {
    explicit PoleError(const std::string& slot)
        : Error("non-removable pole in slot '" + slot + "'"), slot_name(slot) {}
    std::string slot_name;
};

/// Invertible slots (q, v_j, spectral u_i) may carry negative exponents;
/// polynomial slots (adjoined parameters D, mu_a, gamma_a, rho) may not.
enum class SlotKind { invertible, polynomial };

/// An immutable, shared table of named variable slots. Every polynomial and
/// fraction refers to one table; values over different tables never mix.
class VariableTable {
public:
    static std::shared_ptr<const VariableTable>
    make(std::vector<std::pair<std::string, SlotKind>> slots) {
        auto t = std::shared_ptr<VariableTable>(new VariableTable);
        t->names_.reserve(slots.size());
        t->kinds_.reserve(slots.size());
        for (auto& [name, kind] : slots) {
            if (t->find(name) >= 0) throw Error("duplicate variable slot: " + name);
            t->names_.push_back(std::move(name));
            t->kinds_.push_back(kind);
        }
        return t;
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    SlotKind kind(int i) const { return kinds_.at(static_cast<size_t>(i)); }

    int find(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    int index_of(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw Error("unknown variable slot: " + name);
        return i;
    }

    bool same_as(const VariableTable& o) const {
        return names_ == o.names_ && kinds_ == o.kinds_;
    }

private:
    VariableTable() = default;
    std::vector<std::string> names_;
    std::vector<SlotKind> kinds_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline void check_same_table(const TablePtr& a, const TablePtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw Error("variable table mismatch");
}

} // namespace hecke
