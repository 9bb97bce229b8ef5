#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace mfmc {

enum class ValidationIssue {
    Empty,
    Ragged,
    NegativeEntry,
    ZeroColumn,
    NotMinimal,
    NotZeroOne,
    NotAntichain,
    EmptyEdge,
};

inline const char *to_string(ValidationIssue issue) {
    switch (issue) {
    case ValidationIssue::Empty: return "Empty";
    case ValidationIssue::Ragged: return "Ragged";
    case ValidationIssue::NegativeEntry: return "NegativeEntry";
    case ValidationIssue::ZeroColumn: return "ZeroColumn";
    case ValidationIssue::NotMinimal: return "NotMinimal";
    case ValidationIssue::NotZeroOne: return "NotZeroOne";
    case ValidationIssue::NotAntichain: return "NotAntichain";
    case ValidationIssue::EmptyEdge: return "EmptyEdge";
    }
    return "?";
}

/// Rejected input. `first`/`second` are generator (row) indices in the order
/// they were supplied; for NotMinimal/NotAntichain `first` divides `second`.
class ValidationError : public InvalidInputError {
  public:
    ValidationError(ValidationIssue issue, std::size_t first,
                    std::size_t second, const std::string &what)
        : InvalidInputError(std::string(to_string(issue)) + ": " + what),
          issue_(issue), first_(first), second_(second) {}
    ValidationIssue issue() const noexcept { return issue_; }
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

  private:
    ValidationIssue issue_;
    std::size_t first_;
    std::size_t second_;
};

// Canonical order for integer vectors: lexicographically decreasing, so that
// e_1 precedes e_2 and the edge {1,2,3} precedes {1,5}.
struct CanonicalOrder {
    bool operator()(const IntVector &a, const IntVector &b) const {
        return a > b;
    }
};

inline void sort_canonical(std::vector<IntVector> &v) {
    std::sort(v.begin(), v.end(), CanonicalOrder{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// The exponent vectors v_1..v_q (in N^n) of a minimal monomial generating
/// set. Columns are held in canonical order.
class ExponentMatrix {
  public:
    /// Builds from a generator-per-row grid (q rows of n entries).
    static ExponentMatrix from_rows(const std::vector<IntVector> &rows) {
        if (rows.empty() || rows.front().empty())
            throw ValidationError(ValidationIssue::Empty, 0, 0,
                                  "need at least one generator and one variable");
        const std::size_t n = rows.front().size();
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j].size() != n)
                throw ValidationError(ValidationIssue::Ragged, j, j,
                                      "row " + std::to_string(j + 1) +
                                          " has " +
                                          std::to_string(rows[j].size()) +
                                          " entries, expected " +
                                          std::to_string(n));
            for (Int x : rows[j])
                if (x < 0)
                    throw ValidationError(ValidationIssue::NegativeEntry, j, j,
                                          "row " + std::to_string(j + 1));
            if (is_zero(rows[j]))
                throw ValidationError(ValidationIssue::ZeroColumn, j, j,
                                      "row " + std::to_string(j + 1));
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j)
                if (i != j && leq(rows[i], rows[j]))
                    throw ValidationError(
                        ValidationIssue::NotMinimal, i, j,
                        "generator " + std::to_string(i + 1) + " divides " +
                            std::to_string(j + 1));
        ExponentMatrix m;
        m.n_ = n;
        m.columns_ = rows;
        std::sort(m.columns_.begin(), m.columns_.end(), CanonicalOrder{});
        return m;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t q() const noexcept { return columns_.size(); }
    const std::vector<IntVector> &columns() const noexcept { return columns_; }
    const IntVector &column(std::size_t j) const { return columns_.at(j); }
    Int entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }

    Int max_entry() const {
        Int m = 0;
        for (const auto &c : columns_)
            m = std::max(m, *std::max_element(c.begin(), c.end()));
        return m;
    }

    bool is_zero_one() const {
        for (const auto &c : columns_)
            for (Int x : c)
                if (x > 1)
                    return false;
        return true;
    }

    /// Row i of A, i.e. the exponents of x_i across the generators.
    IntVector row(std::size_t i) const {
        IntVector r;
        r.reserve(q());
        for (const auto &c : columns_)
            r.push_back(c[i]);
        return r;
    }

    friend bool operator==(const ExponentMatrix &,
                           const ExponentMatrix &) = default;

  private:
    std::size_t n_ = 0;
    std::vector<IntVector> columns_;
};

} // namespace mfmc
