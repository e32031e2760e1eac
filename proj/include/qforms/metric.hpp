#pragma once

// The sigma-metric of the pair of bimodules, its verification suite, the
// iterated pairing on tensor powers, contractions, Hodge operators and the
// codifferential. All operators are materialized on left-invariant parts;
// degree-k form spaces are coordinatized by column bases of the image of the
// degree-k antisymmetrizer.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qforms/bimodule.hpp"
#include "qforms/exterior.hpp"
#include "qforms/matrix.hpp"

namespace qf {

struct MetricData {
    int N = 0;
    // diagonals of the four morphism matrices, index 0..N-1
    std::vector<RatFunc> F1, F2, G1, G2;
    // pairing matrices: g_pm[(i,j),(k,l)] = F1^j_k F2^l_i pairs omega_ij with
    // theta_kl; g_mp[(i,j),(k,l)] = G1^j_k G2^l_i pairs theta_ij with omega_kl
    OpMatrix g_pm, g_mp;
};

MetricData metric_data(const Calculus& calc);
// negative control: F2 with its first two diagonal entries swapped; the
// sigma-symmetry check must reject this
MetricData metric_data_perturbed(const Calculus& calc);

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    bool passed(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.pass;
        return false;
    }
};

class MetricOps {
  public:
    explicit MetricOps(const Calculus& calc) : MetricOps(calc, metric_data(calc)) {}
    MetricOps(const Calculus& calc, MetricData data);

    const Calculus& calculus() const { return *calc_; }
    const MetricData& data() const { return data_; }
    const ExteriorOps& exterior(FormType tau, BraidSign sign) const {
        return ext_[2 * (tau == FormType::Plus ? 0 : 1) + (sign == BraidSign::Plus ? 0 : 1)];
    }

    // scalar pairing of basis 1-forms, first factor of type tau
    RatFunc pairing(FormType tau, int x, int y) const {
        return tau == FormType::Plus ? data_.g_pm.get(x, y) : data_.g_mp.get(x, y);
    }
    // the pairing as a 1 x N^4 row over the flattened pair basis
    OpMatrix pairing_row(FormType tau) const;

    // iterated pairing on Gamma_tau^{(x)k} (x) Gamma_{-tau}^{(x)l}: slot k of
    // the first factor pairs with slot 1 of the second, then inward; the
    // unpaired slots of the longer factor come through untouched
    std::vector<RatFunc> gtilde_apply(FormType tau, int k, int l,
                                      const std::vector<RatFunc>& xi,
                                      const std::vector<RatFunc>& zeta) const;
    // the same map as a single row matrix on (N^2)^{k+l} (small k only)
    OpMatrix gtilde_matrix(FormType tau, int k, int l) const;

    // contraction of a degree-k form of type tau against a degree-l form of
    // type -tau; result lives in degree |k-l|
    std::vector<RatFunc> contract(FormType tau, BraidSign sign, int k, int l,
                                  const std::vector<RatFunc>& xi,
                                  const std::vector<RatFunc>& zeta) const;

    VerifyReport verify() const;

    // Laplace operator on the span of the generators u^i_j, N^2 x N^2;
    // a scalar multiple of the identity with the degree-one eigenvalue
    OpMatrix laplace_on_generators() const;

  private:
    const Calculus* calc_;
    MetricData data_;
    std::vector<ExteriorOps> ext_;  // [tau][sign], flattened
};

// Coordinates for the degree-k form space: classes of the pivot-column unit
// vectors, with the pivot columns of A^+_k as the concrete image basis.
struct LambdaBasis {
    int k = 0;
    FormType tau = FormType::Plus;
    std::vector<int> pivot_cols;
    OpMatrix image;  // (N^2)^k x r, columns A^+_k e_c
};

enum class HodgeSide : uint8_t { Left, Right };

class HodgeContext {
  public:
    HodgeContext(const MetricOps& ops, uint64_t seed = 1, long max_dim = 4096);

    const MetricOps& metric() const { return *ops_; }
    int n0() const { return n0_; }
    // normalized top-degree representatives; the four mutual contractions of
    // the two of them equal 1
    const std::vector<RatFunc>& top_vec(FormType tau) const {
        return tau == FormType::Plus ? top_plus_ : top_minus_;
    }

    const LambdaBasis& basis(FormType tau, int k) const;
    // Lambda-coordinates of the class of a tensor-space vector
    std::vector<RatFunc> project(FormType tau, int k, const std::vector<RatFunc>& v) const;

    // Hodge operator on degree k of type tau: contraction against the
    // opposite top form (Left pairs the argument first, Right second);
    // matrix from the degree-k to the degree-(n0-k) coordinates
    OpMatrix hodge(FormType tau, int k, HodgeSide side, BraidSign sign) const;

    // codifferential on degree k >= 1 (degree 0 maps to the zero space)
    OpMatrix codifferential(FormType tau, int k, BraidSign sign) const;

    // the induced pairing of degree-k classes of type tau against type -tau
    OpMatrix lambda_pairing(FormType tau, BraidSign sign, int k) const;

  private:
    const MetricOps* ops_;
    int n0_ = 0;
    std::vector<RatFunc> top_plus_, top_minus_;
    mutable std::map<std::pair<int, int>, LambdaBasis> bases_;
};

} // namespace qf
