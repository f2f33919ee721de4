// Finitely generated abelian groups in canonical invariant-factor form, and
// graded collections of them.
#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "momangle/integer_matrix.hpp"

namespace momangle {

class AbelianGroup {
public:
    AbelianGroup() = default;

    // Canonicalizes: drops units, recombines prime powers so that the
    // torsion list is an ascending divisibility chain.  This makes direct
    // sums (concatenated torsion lists) safe.
    AbelianGroup(int rank, std::vector<Integer> torsion) : rank_(rank) {
        std::map<Integer, std::vector<int>> exp_by_prime;
        std::size_t slots = 0;
        for (Integer t : torsion) {
            if (t < 0) t = -t;
            if (t <= 1) continue;
            for (Integer p = 2; p * p <= t; ++p) {
                int e = 0;
                while (t % p == 0) {
                    t /= p;
                    ++e;
                }
                if (e) exp_by_prime[p].push_back(e);
            }
            if (t > 1) exp_by_prime[t].push_back(1);
        }
        for (auto& [p, exps] : exp_by_prime) {
            std::sort(exps.begin(), exps.end(), std::greater<int>());
            slots = std::max(slots, exps.size());
        }
        torsion_.assign(slots, Integer(1));
        for (const auto& [p, exps] : exp_by_prime)
            for (std::size_t i = 0; i < exps.size(); ++i) {
                Integer pe = 1;
                for (int e = 0; e < exps[i]; ++e) pe *= p;
                torsion_[slots - 1 - i] *= pe;
            }
    }

    static AbelianGroup zero() { return AbelianGroup(); }
    static AbelianGroup free(int rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(Integer order) { return AbelianGroup(0, {order}); }

    int rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
    bool is_infinite_cyclic() const { return rank_ == 1 && torsion_.empty(); }

    AbelianGroup direct_sum(const AbelianGroup& other) const {
        std::vector<Integer> t = torsion_;
        t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
        return AbelianGroup(rank_ + other.rank_, std::move(t));
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (rank_ == 1) out = "Z";
        else if (rank_ > 1) out = "Z^" + std::to_string(rank_);
        for (const Integer& t : torsion_) {
            if (!out.empty()) out += " + ";
            out += "Z/" + t.str();
        }
        return out;
    }

private:
    int rank_ = 0;
    std::vector<Integer> torsion_;
};

// True iff rank and canonical torsion lists agree (abstract isomorphism).
inline bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

// Map degree -> group; absent degrees are the zero group.
class GradedGroups {
public:
    GradedGroups() = default;

    void set(int degree, AbelianGroup g) {
        if (!g.is_zero()) groups_[degree] = std::move(g);
    }

    void add_summand(int degree, const AbelianGroup& g) {
        if (g.is_zero()) return;
        auto it = groups_.find(degree);
        if (it == groups_.end())
            groups_[degree] = g;
        else
            it->second = it->second.direct_sum(g);
    }

    AbelianGroup at(int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? AbelianGroup() : it->second;
    }

    const std::map<int, AbelianGroup>& nonzero() const& { return groups_; }
    std::map<int, AbelianGroup> nonzero() && { return std::move(groups_); }

    bool empty() const { return groups_.empty(); }

    int max_degree() const {
        return groups_.empty() ? INT_MIN : groups_.rbegin()->first;
    }

    // Rank of the degree-d part, for d from 0 to the top nonzero degree.
    std::vector<int> rank_vector() const {
        int top = 0;
        for (const auto& [d, g] : groups_) top = std::max(top, d);
        std::vector<int> out(groups_.empty() ? 0 : top + 1, 0);
        for (const auto& [d, g] : groups_)
            if (d >= 0) out[d] = g.rank();
        return out;
    }

    friend bool operator==(const GradedGroups& a, const GradedGroups& b) {
        return a.groups_ == b.groups_;
    }

    std::string to_string() const {
        if (groups_.empty()) return "0";
        std::string out;
        for (const auto& [d, g] : groups_) {
            if (!out.empty()) out += ", ";
            out += std::to_string(d) + ": " + g.to_string();
        }
        return out;
    }

private:
    std::map<int, AbelianGroup> groups_;
};

}  // namespace momangle
