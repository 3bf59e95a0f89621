#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvar/dynamics.hpp"
#include "cvar/estimator.hpp"
#include "cvar/longrun.hpp"

namespace cvar {

// Outcome of the controllability condition det(b' C a) != 0. The decision
// uses a scale-normalized determinant so rescaling a or b cannot flip it;
// values in the warn band signal weak controllability.
struct ControllabilityResult {
    double determinant = 0.0;
    double normalized_determinant = 0.0;
    bool controllable = false;
    bool weak = false;
    // Entries of the bootstrap t-matrix relevant to (b, a): pairs (i, j, t).
    struct Entry {
        int target_row;
        int control_col;
        double tstat;
        bool rejects_zero;
    };
    std::vector<Entry> entries;
    bool all_entries_reject = true;
};

ControllabilityResult controllability_test(const LongRunRep& rep, const Eigen::MatrixXd& a,
                                           const Eigen::MatrixXd& b,
                                           const Eigen::MatrixXd* tstats = nullptr,
                                           double critical_value = 1.96,
                                           double tolerance = 1e-10);

struct PhaseIn {
    int start_year = 0;
    int ramp_years = 10;  // linear ramp lambda_t = min(1, (t - start + 1) / L)

    double weight(int year) const {
        if (year < start_year) return 0.0;
        if (ramp_years <= 1) return 1.0;
        const double w = static_cast<double>(year - start_year + 1) / ramp_years;
        return w < 1.0 ? w : 1.0;
    }
};

// Linear feedback rule
//   nu(X) = a (b'Ca)^-1 [ (b* - b'X) + b'alpha (beta'alpha)^-1 (beta'X - mu) ]
// stored in projected form nu(X) = abar (kappa'X - kappa0). With restricted
// deterministic terms, mu varies by year and the rule is evaluated from the
// same formula with mu(year).
struct ControlPolicy {
    Eigen::MatrixXd a;       // n x m controls selection
    Eigen::MatrixXd b;       // n x m targets selection
    Eigen::VectorXd b_star;  // m objective the rule is built around
    Eigen::VectorXd b_star_requested;  // user objective when re-targeted
    Eigen::MatrixXd abar;    // a (a'a)^-1
    Eigen::MatrixXd kappa;   // n x m, rule coefficients (kappa' x - kappa0)
    Eigen::VectorXd kappa0;  // m, evaluated with mu at the policy start year
    PhaseIn phase_in;

    // Pieces needed to evaluate nu with year-varying mu.
    Eigen::MatrixXd gain;      // a (b'Ca)^-1, n x m
    Eigen::MatrixXd sys_load;  // b'alpha (beta'alpha)^-1, m x r
    Eigen::MatrixXd beta;      // n x r
    Eigen::MatrixXd alpha;     // n x r
    DeterministicSpec det;
    Eigen::MatrixXd delta;     // q_r x r restricted rows
    int origin_year = 0;

    int n() const { return static_cast<int>(a.rows()); }
    int m() const { return static_cast<int>(a.cols()); }

    Eigen::VectorXd mu_at(int year) const;
    // Full-strength rule nu(X) at a given year.
    Eigen::VectorXd rule(const Eigen::VectorXd& x, int year) const;
};

// Builds the rule; throws NotControllable when det(b'Ca) is below tolerance.
ControlPolicy build_policy(const CvarEstimate& est, const LongRunRep& rep,
                           const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                           const Eigen::VectorXd& b_star, const PhaseIn& phase_in);

// X^ctr = X + lambda_t nu(X).
Eigen::VectorXd apply_control(const ControlPolicy& policy, const Eigen::VectorXd& x,
                              int year);

// The controlled system written as an augmented VEC / VARMA. Loadings and
// relations follow the stacked form
//   dX_{t+1} = (alpha, (I+alpha beta')abar) [beta'X - mu; kappa'X - kappa0] + eps.
struct AugmentedSystem {
    Eigen::MatrixXd loadings;    // n x (r + m)
    Eigen::MatrixXd relations;   // (r + m) x n   rows beta', kappa'
    Eigen::VectorXd intercepts;  // (r + m)       rows mu, kappa0
    Eigen::MatrixXd companion;   // nk x nk controlled companion matrix
    Eigen::VectorXd companion_constant;  // nk
    Eigen::MatrixXd ma_coef;     // (I + alpha beta') abar kappa', VARMA(.,1) block
    double ma_spectral_radius = 0.0;
    int unit_roots_before = 0;
    int unit_roots_after = 0;
};

// Builds the fully phased-in (lambda = 1) controlled system and checks that
// the unit-root count drops from n - r to n - r - m; otherwise throws
// PolicyDoesNotStabilize.
AugmentedSystem augment_system(const CvarEstimate& est, const ControlPolicy& policy);

// Steady-state policy assignment W_{t+1} = abar kappa' eps_t.
Eigen::VectorXd policy_assignment(const ControlPolicy& policy, const Eigen::VectorXd& eps);

// The three equivalent write-ups of the controlled VAR(1) law of motion,
// simulated with a common shock sequence. `RuleFeedback` applies the rule to
// the state and then the VEC step; `AugmentedVec` iterates the stacked form;
// `Varma` iterates the MA(1) form and needs the previous-period shock to be
// consistent with the state (kappa'X_t = kappa0 + kappa'eps_t).
enum class ControlledForm { RuleFeedback, AugmentedVec, Varma };

Eigen::MatrixXd simulate_controlled(const VecmDynamics& dyn, const ControlPolicy& policy,
                                    const Eigen::VectorXd& x0, int start_year,
                                    const Eigen::MatrixXd& shocks, ControlledForm form,
                                    const Eigen::VectorXd* eps_prev = nullptr);

}  // namespace cvar
