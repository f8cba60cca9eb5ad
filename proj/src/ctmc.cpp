#include "vran/ctmc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace vran {

namespace {

// Entries in [-kClampSlack, 0) are floating-point noise and become 0.
constexpr double kClampSlack = 1e-14;

std::vector<bool> reachable(const Matrix& q, std::size_t start, bool forward)
{
    const std::size_t n = q.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            const double rate = forward ? q(i, j) : q(j, i);
            if (j != i && rate > 0.0 && !seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    return seen;
}

void check_irreducible(const std::vector<std::string>& states, const Matrix& q)
{
    for (bool forward : {true, false}) {
        const auto seen = reachable(q, 0, forward);
        std::string missing;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i])
                missing += (missing.empty() ? "" : ", ") + states[i];
        }
        if (!missing.empty()) {
            throw ModelError("chain is reducible: {" + missing + "} " +
                             (forward ? "cannot be reached from " : "cannot reach ") +
                             states[0]);
        }
    }
}

StationaryDistribution finish(const CtmcModel& model, std::vector<double> pi)
{
    for (double& p : pi) {
        if (p < 0.0 && p >= -kClampSlack)
            p = 0.0;
        if (p < 0.0)
            throw NumericError("solver produced a negative probability " + std::to_string(p));
    }
    double total = 0.0;
    for (double p : pi)
        total += p;
    for (double& p : pi)
        p /= total;
    StationaryDistribution out;
    out.residual = balance_residual(model, pi);
    out.probabilities = std::move(pi);
    return out;
}

}  // namespace

std::size_t CtmcModel::index_of(const std::string& label) const
{
    const auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end())
        throw ModelError("unknown state '" + label + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

double CtmcModel::max_abs_rate() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        for (double v : q_.row(i))
            m = std::max(m, std::abs(v));
    return m;
}

std::size_t CtmcModel::transition_count() const
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (i != j && q_(i, j) > 0.0)
                ++count;
    return count;
}

CtmcModel build_generator(std::vector<std::string> states, std::span<const Transition> transitions)
{
    if (states.empty())
        throw ModelError("chain has no states");

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!index.emplace(states[i], i).second)
            throw ModelError("duplicate state label '" + states[i] + "'");
    }

    Matrix q(states.size());
    for (const auto& t : transitions) {
        const std::string edge = t.from + " -> " + t.to;
        const auto from = index.find(t.from);
        const auto to = index.find(t.to);
        if (from == index.end())
            throw ModelError("transition " + edge + ": unknown source state '" + t.from + "'");
        if (to == index.end())
            throw ModelError("transition " + edge + ": unknown target state '" + t.to + "'");
        if (from->second == to->second)
            throw ModelError("transition " + edge + " is a self-loop");
        if (!(t.rate > 0.0) || !std::isfinite(t.rate))
            throw ModelError("transition " + edge + " has non-positive rate " +
                             std::to_string(t.rate));
        q(from->second, to->second) += t.rate;
    }

    for (std::size_t i = 0; i < q.size(); ++i) {
        double exit = 0.0;
        for (std::size_t j = 0; j < q.size(); ++j)
            if (j != i)
                exit += q(i, j);
        q(i, i) = -exit;
    }

    if (states.size() > 1)
        check_irreducible(states, q);

    CtmcModel model;
    model.states_ = std::move(states);
    model.q_ = std::move(q);
    return model;
}

CtmcModel scaled(const CtmcModel& model, double factor)
{
    if (!(factor > 0.0))
        throw ModelError("scale factor must be positive");
    CtmcModel out = model;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            out.q_(i, j) *= factor;
    return out;
}

double balance_residual(const CtmcModel& model, std::span<const double> pi)
{
    const Matrix& q = model.generator();
    double worst = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i)
            acc += pi[i] * q(i, j);
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

StationaryDistribution solve_direct(const CtmcModel& model)
{
    const std::size_t n = model.size();
    if (n == 1)
        return finish(model, {1.0});

    // Q^T pi^T = 0 with the last balance equation swapped for sum(pi) = 1.
    const Matrix& q = model.generator();
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = q(i, j);
    a.row(static_cast<Eigen::Index>(n - 1)).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    rhs(static_cast<Eigen::Index>(n - 1)) = 1.0;

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-300) || !std::isfinite(rcond)) {
        std::ostringstream msg;
        msg << "stationary system is singular (reciprocal condition estimate " << rcond << ")";
        throw NumericError(msg.str());
    }
    const Eigen::VectorXd x = lu.solve(rhs);
    return finish(model, std::vector<double>(x.data(), x.data() + x.size()));
}

StationaryDistribution solve_embedded_dtmc(const CtmcModel& model)
{
    const std::size_t n = model.size();
    const Matrix& q = model.generator();
    std::vector<double> holding(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double exit = model.exit_rate(i);
        if (!(exit > 0.0))
            throw ModelError("state '" + model.states()[i] + "' is absorbing (zero exit rate)");
        holding[i] = 1.0 / exit;
    }

    // Jump chain; its diagonal is zero.
    Matrix p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = (i == j) ? 0.0 : q(i, j) * holding[i];

    // Grassmann-Taksar-Heyman elimination: no subtractions, so tiny
    // probabilities keep full relative accuracy.
    for (std::size_t k = n - 1; k > 0; --k) {
        double s = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            s += p(k, j);
        if (!(s > 0.0))
            throw NumericError("jump chain elimination hit a zero pivot at state '" +
                               model.states()[k] + "'");
        for (std::size_t i = 0; i < k; ++i)
            p(i, k) /= s;
        for (std::size_t i = 0; i < k; ++i) {
            const double pik = p(i, k);
            if (pik == 0.0)
                continue;
            for (std::size_t j = 0; j < k; ++j)
                p(i, j) += pik * p(k, j);
        }
    }
    std::vector<double> x(n, 0.0);
    x[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            acc += x[i] * p(i, k);
        x[k] = acc;
    }

    // Jump-chain visit frequencies times mean sojourn give time fractions.
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= holding[i];
    return finish(model, std::move(x));
}

void dump_chain(std::ostream& os, const CtmcModel& model)
{
    const auto& states = model.states();
    const Matrix& q = model.generator();
    os << "state";
    for (const auto& s : states)
        os << '\t' << s;
    os << '\n';
    const auto old_precision = os.precision(17);
    for (std::size_t i = 0; i < states.size(); ++i) {
        os << states[i];
        for (double v : q.row(i))
            os << '\t' << v;
        os << '\n';
    }
    os.precision(old_precision);
}

}  // namespace vran
