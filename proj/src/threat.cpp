#include "gcr/threat.hpp"

#include "gcr/engine.hpp"

namespace gcr {

namespace {

/// Mode 0: cooperative. Mode m in 1..N: punishing token m's deviation.
/// The first observed deviation locks the mode; later deviators are ignored.
class ThreatStrategy final : public Strategy {
public:
    ThreatStrategy(int token, std::shared_ptr<const GameSpec> spec,
                   std::vector<std::shared_ptr<const PolicyTable>> aux)
        : Strategy(token), spec_(std::move(spec)), aux_(std::move(aux)) {}

    int act(int mode, const State& s) const override {
        const int guide = mode == 0 ? token() : mode;
        return aux_[static_cast<size_t>(guide) - 1]->at(s);
    }

    int update(int mode, const State& s, int action) const override {
        if (mode != 0) return mode;
        if (s.is_terminal() || is_capture(*spec_, s)) return mode;
        const int mover = s.mover;
        if (mover == token()) return mode;
        return action == aux_[static_cast<size_t>(mover) - 1]->at(s) ? 0 : mover;
    }

    std::string name() const override { return "threat(token " + std::to_string(token()) + ")"; }

private:
    std::shared_ptr<const GameSpec> spec_;
    std::vector<std::shared_ptr<const PolicyTable>> aux_;
};

} // namespace

Profile ThreatProfile::base_profile() const {
    Profile out;
    const int tokens = static_cast<int>(aux_policy.size());
    for (int t = 1; t <= tokens; ++t)
        out.push_back(std::make_shared<TableStrategy>(t, aux_policy[static_cast<size_t>(t) - 1]));
    return out;
}

ThreatProfile build_threat_profile(const GameSpec& spec) {
    if (spec.scheme().kind == SchemeKind::generalized)
        fail(ErrorCode::precondition, "threat profile is defined for the chain payoff scheme");
    if (spec.players() != spec.tokens() || spec.aggregation() != Aggregation::per_token)
        fail(ErrorCode::precondition, "threat profile needs one token per player");

    ThreatProfile out;
    for (int m = 1; m <= spec.tokens(); ++m) {
        ZeroSumSolution aux = solve_exact(build_aux_game(spec, m));
        if (!out.space) out.space = aux.space;
        out.aux_policy.push_back(aux.policy);
    }
    auto spec_copy = std::make_shared<const GameSpec>(spec);
    for (int t = 1; t <= spec.tokens(); ++t)
        out.strategies.push_back(std::make_shared<ThreatStrategy>(t, spec_copy, out.aux_policy));
    return out;
}

ThreatReport verify_threat_ne(const GameSpec& spec, const ThreatProfile& profile, const State& s0, double tol) {
    spec.check_state(s0);
    ThreatReport report;
    report.s0 = s0;
    report.pass = true;

    History on_path = simulate(spec, profile.strategies, s0);
    std::vector<double> q = discounted_payoff(spec, on_path);

    for (int n = 1; n <= spec.players(); ++n) {
        Profile opponents(profile.strategies.size());
        for (int t = 1; t <= spec.tokens(); ++t)
            if (spec.controller(t) != n) opponents[static_cast<size_t>(t) - 1] = profile.strategies[static_cast<size_t>(t) - 1];
        BestResponseResult br = best_response(spec, opponents, n, s0);
        ThreatPlayerCheck check;
        check.player = n;
        check.on_path = q[static_cast<size_t>(n) - 1];
        check.best_deviation = br.value;
        check.pass = br.value <= check.on_path + tol;
        report.pass = report.pass && check.pass;
        report.players.push_back(check);
    }
    return report;
}

} // namespace gcr
