#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropifacet/lift.hpp"
#include "tropifacet/polytope.hpp"

namespace tropifacet {

/// Thrown by perturb when the sampled gammas fail the lex-level
/// general-position assertion; the caller re-samples.
struct ResampleRequest : Error {
    using Error::Error;
};

/// Integer perturbation directions plus the extremality types they encode.
/// Gammas must be in tropical general position (as projective points);
/// extremality is derived from the polytope and requires purity.
class PerturbationScheme {
  public:
    PerturbationScheme(const PolytopeRat& P, std::vector<std::vector<long long>> gammas)
        : gammas_(std::move(gammas)) {
        const int n = P.dimension(), p = P.generator_count();
        if (static_cast<int>(gammas_.size()) != p)
            throw ValidationError("need one gamma vector per generator");
        for (const auto& g : gammas_)
            if (static_cast<int>(g.size()) != n)
                throw ValidationError("gamma vectors must have the polytope dimension");

        const auto rep = extreme_points(P);
        detail::require_pure(P, rep);
        extremality_.resize(static_cast<size_t>(p));
        for (int r = 0; r < p; ++r)
            if (rep.extreme[static_cast<size_t>(r)])
                extremality_[static_cast<size_t>(r)] = rep.types[static_cast<size_t>(r)].to_vector()[0];

        std::vector<PointRat> pts;
        pts.reserve(gammas_.size());
        for (const auto& g : gammas_) {
            std::vector<Rat> c(g.begin(), g.end());
            pts.push_back(PointRat(std::move(c)));
        }
        if (!in_general_position(pts))
            throw ValidationError("gamma vectors are not in general position");
    }

    const std::vector<std::vector<long long>>& gammas() const { return gammas_; }
    const std::optional<int>& extremality_type(int r) const {
        return extremality_[static_cast<size_t>(r)];
    }

  private:
    std::vector<std::vector<long long>> gammas_;
    std::vector<std::optional<int>> extremality_;
};

struct GammaResult {
    std::vector<std::vector<long long>> gammas;
    int attempts = 0;
};

/// Rejection-samples integer vectors from a growing range until they are in
/// tropical general position. Deterministic for a fixed seed.
inline GammaResult generate_gammas(int p, int n, std::uint64_t seed, const Budget& budget = {}) {
    if (p < 1 || n < 2) throw ValidationError("gamma generation needs p >= 1 and n >= 2");
    std::mt19937_64 eng(seed);
    // Raw engine draws modulo the range keep the stream identical across
    // standard libraries.
    for (int attempt = 1; attempt <= budget.max_gamma_attempts; ++attempt) {
        const long long range = 4LL * p * n + 4LL * attempt;
        const unsigned long long span = static_cast<unsigned long long>(2 * range + 1);
        std::vector<std::vector<long long>> cand(static_cast<size_t>(p),
                                                 std::vector<long long>(static_cast<size_t>(n)));
        for (auto& row : cand)
            for (auto& x : row) x = static_cast<long long>(eng() % span) - range;
        std::vector<PointRat> pts;
        pts.reserve(cand.size());
        for (const auto& g : cand) {
            std::vector<Rat> c(g.begin(), g.end());
            pts.push_back(PointRat(std::move(c)));
        }
        if (in_general_position(pts)) return {std::move(cand), attempt};
    }
    throw ResourceError("no gamma vectors in general position after " +
                        std::to_string(budget.max_gamma_attempts) + " attempts");
}

/// The symbolic perturbation: an extreme generator of type i becomes
/// (v^r, e^i, gamma^r), any other generator (v^r, 0, gamma^r). The result
/// must be in general position over the lex triples; if not, the gammas
/// were unlucky and a ResampleRequest is thrown.
inline PolytopeLex perturb(const PolytopeRat& P, const PerturbationScheme& scheme) {
    const int n = P.dimension(), p = P.generator_count();
    if (static_cast<int>(scheme.gammas().size()) != p ||
        static_cast<int>(scheme.gammas()[0].size()) != n)
        throw ValidationError("perturbation scheme does not match the polytope");
    std::vector<PointLex> pts;
    pts.reserve(static_cast<size_t>(p));
    for (int r = 0; r < p; ++r) {
        const auto& v = P.generator(r);
        const auto& gamma = scheme.gammas()[static_cast<size_t>(r)];
        const auto& type = scheme.extremality_type(r);
        std::vector<LexTriple> c;
        c.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            c.emplace_back(v[i], Rat(type && *type == i ? 1 : 0), Rat(gamma[static_cast<size_t>(i)]));
        pts.push_back(PointLex(std::move(c)));
    }
    PolytopeLex out(std::move(pts));
    if (!in_general_position(out.generators()))
        throw ResampleRequest("perturbed generators are not in general position; resample gammas");
    return out;
}

struct PerturbationLemmasReport {
    bool extremality_preserved = false;
    bool perturbed_pure = false;
    std::string note;
    bool pass() const { return extremality_preserved && perturbed_pure; }
};

/// Asserts the two perturbation lemmas: extremality types are preserved
/// generator-by-generator, and the perturbed polytope is pure.
inline PerturbationLemmasReport check_perturbation_lemmas(const PolytopeRat& P,
                                                          const PolytopeLex& Pt) {
    PerturbationLemmasReport out;
    if (P.generator_count() != Pt.generator_count() || P.dimension() != Pt.dimension())
        throw ValidationError("perturbed polytope does not match the original");
    const auto before = extreme_points(P);
    const auto after = extreme_points(Pt);
    out.extremality_preserved = true;
    for (int r = 0; r < P.generator_count(); ++r) {
        const auto s = static_cast<size_t>(r);
        if (before.extreme[s] != after.extreme[s] || before.types[s] != after.types[s]) {
            out.extremality_preserved = false;
            out.note = "extremality types changed on generator " + std::to_string(r + 1);
            break;
        }
    }
    out.perturbed_pure = is_pure(Pt);
    if (!out.perturbed_pure && out.note.empty()) out.note = "perturbed polytope is not pure";
    return out;
}

/// First-order apex pattern: after rescaling so that (pi2 a)_j = 1, the
/// pi2 coordinates of an (I,j)-pseudovertex apex are 0 on I and 1 elsewhere.
inline bool check_pi2_apex(const PolytopeLex& Pt, const PointLex& apex, IndexSet I, int j) {
    const int n = Pt.dimension();
    if (I.empty() || I == IndexSet::full(n) || !I.subset_of(IndexSet::full(n)))
        throw ValidationError("I must be a non-empty proper subset of the coordinates");
    if (j < 0 || j >= n || I.contains(j)) throw ValidationError("j must be a coordinate outside I");
    const Rat shift = Rat(1) - pi2(apex[j]);
    for (int i = 0; i < n; ++i) {
        const Rat w = pi2(apex[i]) + shift;
        if (w != Rat(I.contains(i) ? 0 : 1)) return false;
    }
    return true;
}

/// pi1 of the apex, same index set.
inline HalfSpaceRat project_halfspace(const HalfSpaceLex& H) {
    return HalfSpaceRat(project1(H.apex()), H.indices());
}

struct VerificationStage {
    std::string name;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    int gamma_attempts = 0;
    bool pass = false;
    std::vector<VerificationStage> stages;
    std::optional<std::string> certificate;

    std::vector<std::vector<long long>> gammas;
    std::optional<PolytopeLex> perturbed;
    std::vector<HalfSpaceLex> representation_perturbed;
    std::vector<HalfSpaceRat> representation_projected;
    std::optional<LiftedCone<LexTriple>> lift;
    std::vector<Facet<LexTriple>> facets;
    std::vector<HalfSpaceRat> facet_halfspaces;
};

namespace detail {

inline std::string describe(const HalfSpaceRat& H) {
    std::string out = "H((";
    for (int i = 0; i < H.dimension(); ++i)
        out += (i ? "," : "") + to_string(H.apex()[i]);
    return out + ")," + subset_string(H.indices()) + ")";
}

}  // namespace detail

/// Runs the constructive proof of the main theorem on a pure polytope:
/// perturb, check the perturbation lemmas, build the perturbed canonical
/// representation (with the pi2 apex pattern), enumerate the facets of the
/// canonical lift over the lex series field, tropicalize them into the
/// unperturbed space, and check that they cover the projected canonical
/// representation and contain every generator. Any failing stage carries a
/// certificate; under correct arithmetic every stage passes.
inline VerificationReport theorem_pipeline(const PolytopeRat& P, std::uint64_t seed,
                                           const Budget& budget = {}) {
    detail::require_pure(P, extreme_points(P));
    const int n = P.dimension(), p = P.generator_count();

    VerificationReport rep;
    rep.seed = seed;

    auto fail = [&](const std::string& stage, const std::string& why) -> VerificationReport& {
        rep.stages.push_back({stage, false, why});
        rep.certificate = stage + ": " + why;
        rep.pass = false;
        return rep;
    };

    // (1) perturb, resampling gammas when the lex general-position
    // assertion rejects them.
    for (int attempt = 0; !rep.perturbed; ++attempt) {
        if (attempt >= budget.max_gamma_attempts)
            throw ResourceError("no admissible perturbation after " +
                                std::to_string(budget.max_gamma_attempts) + " attempts");
        auto gam = generate_gammas(p, n, seed + static_cast<std::uint64_t>(attempt), budget);
        rep.gamma_attempts += gam.attempts;
        try {
            PerturbationScheme scheme(P, gam.gammas);
            rep.perturbed = perturb(P, scheme);
            rep.gammas = std::move(gam.gammas);
        } catch (const ResampleRequest&) {
            continue;
        }
    }
    rep.stages.push_back({"perturb", true, ""});

    // (2) perturbation lemmas.
    const auto lemmas = check_perturbation_lemmas(P, *rep.perturbed);
    if (!lemmas.pass()) return fail("perturbation_lemmas", lemmas.note);
    rep.stages.push_back({"perturbation_lemmas", true, ""});

    // (3) canonical representation of the perturbed polytope, and the
    // pi2 apex pattern on every member.
    try {
        rep.representation_perturbed = canonical_representation(*rep.perturbed, budget);
        for (const auto& H : rep.representation_perturbed) {
            bool certified = false;
            for (int j = 0; j < n && !certified; ++j) {
                if (H.indices().contains(j)) continue;
                if (is_Ij_pseudovertex(*rep.perturbed, H.apex(), H.indices(), j)) {
                    certified = true;
                    if (!check_pi2_apex(*rep.perturbed, H.apex(), H.indices(), j))
                        return fail("perturbed_representation",
                                    "pi2 apex pattern fails on " +
                                        detail::describe(project_halfspace(H)));
                }
            }
            if (!certified)
                return fail("perturbed_representation",
                            "no (I,j) certificate for a representation member");
        }
    } catch (const Error& e) {
        return fail("perturbed_representation", e.what());
    }
    rep.stages.push_back({"perturbed_representation", true, ""});

    // (4) facets of the canonical lift, tropicalized into the unperturbed
    // space; the lex-level route must agree with the projected route.
    try {
        rep.lift = canonical_lift(*rep.perturbed);
        rep.facets = enumerate_facets(*rep.lift, budget);
        std::set<HalfSpaceRat> tropicalized;
        for (const auto& F : rep.facets) {
            const HalfSpaceRat direct = tropicalize_facet_projected(F);
            const HalfSpaceRat via_lex = project_halfspace(tropicalize_facet(F));
            if (!(direct == via_lex))
                throw InternalError("projected and lex tropicalizations disagree");
            tropicalized.insert(direct);
        }
        rep.facet_halfspaces.assign(tropicalized.begin(), tropicalized.end());
    } catch (const Error& e) {
        return fail("lift_facets", e.what());
    }
    rep.stages.push_back({"lift_facets", true, ""});

    // (5) the projected canonical representation is covered by the
    // tropicalized facet half-spaces.
    {
        std::set<HalfSpaceRat> facet_set(rep.facet_halfspaces.begin(),
                                         rep.facet_halfspaces.end());
        for (const auto& Ht : rep.representation_perturbed) {
            const HalfSpaceRat H = project_halfspace(Ht);
            rep.representation_projected.push_back(H);
            if (!facet_set.count(H))
                return fail("containment",
                            detail::describe(H) + " is not among the tropicalized facets");
        }
    }
    rep.stages.push_back({"containment", true, ""});

    // (6) every tropicalized facet half-space contains all generators.
    for (const auto& H : rep.facet_halfspaces)
        for (int r = 0; r < p; ++r)
            if (!halfspace_contains(H, P.generator(r)))
                return fail("generators_covered", detail::describe(H) + " misses generator " +
                                                      std::to_string(r + 1));
    rep.stages.push_back({"generators_covered", true, ""});

    rep.pass = true;
    return rep;
}

}  // namespace tropifacet
