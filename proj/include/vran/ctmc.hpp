#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vran {

/// Structural problem in a chain: unknown label, bad rate, reducible or absorbing.
class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A linear solve that is singular to working precision.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Transition {
    std::string from;
    std::string to;
    double rate;
};

/// Dense row-major square matrix, sized for the few dozen states we need.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/**
 * A finite, irreducible continuous-time Markov chain: ordered state labels
 * plus the generator Q. Immutable once built; construct through
 * build_generator() which enforces
 *   - off-diagonal entries >= 0 and rows summing to zero,
 *   - a single strongly connected component.
 */
class CtmcModel {
  public:
    const std::vector<std::string>& states() const { return states_; }
    const Matrix& generator() const { return q_; }
    std::size_t size() const { return states_.size(); }

    /// Index of a label, or throws ModelError.
    std::size_t index_of(const std::string& label) const;

    /// max |q_ij| over the whole matrix.
    double max_abs_rate() const;

    /// Total exit rate of state i, i.e. -q_ii.
    double exit_rate(std::size_t i) const { return -q_(i, i); }

    /// Number of positive off-diagonal entries.
    std::size_t transition_count() const;

  private:
    friend CtmcModel build_generator(std::vector<std::string>, std::span<const Transition>);
    friend CtmcModel scaled(const CtmcModel&, double);

    std::vector<std::string> states_;
    Matrix q_;
};

/// Assemble Q from labelled transitions. Parallel edges are summed.
CtmcModel build_generator(std::vector<std::string> states, std::span<const Transition> transitions);

/// The same chain with every rate multiplied by factor > 0.
CtmcModel scaled(const CtmcModel& model, double factor);

struct StationaryDistribution {
    std::vector<double> probabilities;
    /// ||pi Q||_inf of the reported vector.
    double residual = 0.0;

    double operator[](std::size_t i) const { return probabilities[i]; }
    std::size_t size() const { return probabilities.size(); }
};

/// pi Q = 0, sum(pi) = 1 via LU on Q^T with the last equation replaced by
/// the normalization row.
StationaryDistribution solve_direct(const CtmcModel& model);

/**
 * Stationary law through the jump chain: P = I + Q / diag(-Q), stationary
 * vector of P by GTH elimination, then reweighting by mean holding times
 * 1/|q_ii| and renormalizing. Throws ModelError if some state has no exit.
 */
StationaryDistribution solve_embedded_dtmc(const CtmcModel& model);

/// ||pi Q||_inf.
double balance_residual(const CtmcModel& model, std::span<const double> pi);

/// Tab-separated dump: a header row of labels, then one row per state.
void dump_chain(std::ostream& os, const CtmcModel& model);

}  // namespace vran
