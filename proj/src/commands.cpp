#include "tropifacet/commands.hpp"

#include <chrono>
#include <json.hpp>

#include "tropifacet/perturb.hpp"
#include "tropifacet/series_text.hpp"
#include "tropifacet/svg.hpp"

namespace tropifacet {

namespace {

using nlohmann::ordered_json;

template <OrderedAbelianGroup G>
ordered_json point_json(const ProjectivePoint<G>& p) {
    ordered_json out = ordered_json::array();
    for (const auto& c : p.coords()) out.push_back(to_string(c));
    return out;
}

ordered_json indices_json(IndexSet s) {
    ordered_json out = ordered_json::array();
    for (int i : s.to_vector()) out.push_back(i + 1);
    return out;
}

template <OrderedAbelianGroup G>
ordered_json halfspace_json(const TropicalHalfSpace<G>& h) {
    ordered_json out;
    out["apex"] = point_json(h.apex());
    out["I"] = indices_json(h.indices());
    return out;
}

ordered_json type_json(const TypeVector& S) {
    ordered_json out = ordered_json::array();
    for (auto s : S.sets) out.push_back(indices_json(s));
    return out;
}

template <OrderedAbelianGroup G>
ordered_json series_row_json(const SeriesVector<G>& row) {
    ordered_json out = ordered_json::array();
    for (const auto& s : row) out.push_back(render_series(s));
    return out;
}

class StageTimer {
  public:
    explicit StageTimer(bool enabled) : enabled_(enabled) {}
    void mark(ordered_json& target, const char* key) {
        if (!enabled_) return;
        const auto now = std::chrono::steady_clock::now();
        target[key] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::uint64_t effective_seed(const InstanceFile& inst, const CommandOptions& opts) {
    if (opts.seed) return *opts.seed;
    if (inst.seed) return *inst.seed;
    return 0;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

LiftKind parse_lift_kind(const std::string& name) {
    if (name == "canonical") return LiftKind::Canonical;
    if (name == "perturbed") return LiftKind::Perturbed;
    if (name == "custom") return LiftKind::Custom;
    throw ValidationError("unknown lift kind '" + name + "' (canonical|perturbed|custom)");
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ResourceError*>(&e)) return 4;
    if (dynamic_cast<const InternalError*>(&e)) return 3;
    if (dynamic_cast<const PreconditionError*>(&e)) return 2;
    if (dynamic_cast<const DegeneracyError*>(&e)) return 2;
    if (dynamic_cast<const DimensionError*>(&e)) return 2;
    if (dynamic_cast<const ValidationError*>(&e)) return 1;
    return 3;
}

std::string cmd_analyze(const InstanceFile& inst, const CommandOptions& opts) {
    const PolytopeRat P = inst.polytope();
    const int n = P.dimension(), p = P.generator_count();
    StageTimer timer(opts.timing);

    ordered_json out;
    out["schema"] = 1;
    out["command"] = "analyze";
    out["dimension"] = n;
    out["generator_count"] = p;
    out["generators"] = ordered_json::array();
    for (const auto& g : P.generators()) out["generators"].push_back(point_json(g));

    out["general_position"] = in_general_position(P.generators(), opts.budget.max_permanent_size);
    const auto ext = extreme_points(P);
    const bool pure = is_pure(P);
    out["pure"] = pure;
    out["extreme_points"] = ordered_json::array();
    for (int r = 0; r < p; ++r) {
        ordered_json e;
        e["generator"] = r + 1;
        e["extreme"] = static_cast<bool>(ext.extreme[static_cast<size_t>(r)]);
        e["types"] = indices_json(ext.types[static_cast<size_t>(r)]);
        out["extreme_points"].push_back(std::move(e));
    }
    timer.mark(out, "elapsed_ms_extremes");

    const auto pv = enumerate_pseudovertices(P, opts.budget);
    out["pseudovertices"] = ordered_json::array();
    for (const auto& q : pv) out["pseudovertices"].push_back(point_json(q));
    timer.mark(out, "elapsed_ms_pseudovertices");

    out["ij_pseudovertices"] = ordered_json::array();
    for (const auto& a : pv) {
        const TypeVector S = type_of(P, a);
        ordered_json certs = ordered_json::array();
        const std::uint64_t full = IndexSet::full(n).mask();
        for (std::uint64_t m = 1; m < full; ++m) {
            const IndexSet I = IndexSet::from_mask(m);
            for (int j = 0; j < n; ++j) {
                if (I.contains(j)) continue;
                if (!detail::ij_properties(S, I, j, p)) continue;
                ordered_json cert;
                cert["I"] = indices_json(I);
                cert["j"] = j + 1;
                if (pure) {
                    ordered_json wit;
                    for (const auto& [k, r] : witness_extreme_points(P, a, I, j))
                        wit[std::to_string(k + 1)] = r + 1;
                    cert["witnesses"] = std::move(wit);
                }
                certs.push_back(std::move(cert));
            }
        }
        if (certs.empty()) continue;
        ordered_json entry;
        entry["apex"] = point_json(a);
        entry["type"] = type_json(S);
        entry["certificates"] = std::move(certs);
        out["ij_pseudovertices"].push_back(std::move(entry));
    }

    if (pure) {
        out["canonical_representation"] = ordered_json::array();
        for (const auto& h : detail::canonical_representation_from(P, pv))
            out["canonical_representation"].push_back(halfspace_json(h));
    } else {
        out["canonical_representation"] = nullptr;
    }
    timer.mark(out, "elapsed_ms_representation");
    return dump(out);
}

std::string cmd_lift(const InstanceFile& inst, const CommandOptions& opts) {
    const PolytopeRat P = inst.polytope();
    ordered_json out;
    out["schema"] = 1;
    out["command"] = "lift";
    StageTimer timer(opts.timing);

    auto emit_facets = [&](const auto& cone, auto&& tropicalize, const char* key) {
        out[key] = ordered_json::array();
        for (const auto& F : enumerate_facets(cone, opts.budget)) {
            ordered_json fj;
            fj["support"] = indices_json(F.support);
            fj["normal"] = series_row_json(F.normal);
            tropicalize(fj, F);
            out[key].push_back(std::move(fj));
        }
    };

    switch (opts.lift_kind) {
        case LiftKind::Canonical: {
            out["kind"] = "canonical";
            const auto L = canonical_lift(P);
            out["lift_generators"] = ordered_json::array();
            for (const auto& row : L.generators())
                out["lift_generators"].push_back(series_row_json(row));
            if (opts.facets)
                emit_facets(L, [](ordered_json& fj, const Facet<Rat>& F) {
                    fj["tropical_halfspace"] = halfspace_json(tropicalize_facet(F));
                }, "facets");
            break;
        }
        case LiftKind::Custom: {
            out["kind"] = "custom";
            if (!inst.lift)
                throw PreconditionError("custom lift requested but the instance has no lift field");
            const auto L = custom_lift(P, *inst.lift);
            out["lift_generators"] = ordered_json::array();
            for (const auto& row : L.generators())
                out["lift_generators"].push_back(series_row_json(row));
            if (opts.facets)
                emit_facets(L, [](ordered_json& fj, const Facet<Rat>& F) {
                    fj["tropical_halfspace"] = halfspace_json(tropicalize_facet(F));
                }, "facets");
            break;
        }
        case LiftKind::Perturbed: {
            out["kind"] = "perturbed";
            const std::uint64_t seed = effective_seed(inst, opts);
            out["seed"] = seed;
            detail::require_pure(P, extreme_points(P));
            std::optional<PolytopeLex> Pt;
            int attempts = 0;
            for (int attempt = 0; !Pt; ++attempt) {
                if (attempt >= opts.budget.max_gamma_attempts)
                    throw ResourceError("no admissible perturbation within the attempt budget");
                auto gam = generate_gammas(P.generator_count(), P.dimension(),
                                           seed + static_cast<std::uint64_t>(attempt), opts.budget);
                attempts += gam.attempts;
                try {
                    Pt = perturb(P, PerturbationScheme(P, gam.gammas));
                } catch (const ResampleRequest&) {
                    continue;
                }
            }
            out["gamma_attempts"] = attempts;
            out["perturbed_generators"] = ordered_json::array();
            for (const auto& g : Pt->generators())
                out["perturbed_generators"].push_back(point_json(g));
            const auto L = canonical_lift(*Pt);
            out["lift_generators"] = ordered_json::array();
            for (const auto& row : L.generators())
                out["lift_generators"].push_back(series_row_json(row));
            if (opts.facets)
                emit_facets(L, [](ordered_json& fj, const Facet<LexTriple>& F) {
                    const auto lex = tropicalize_facet(F);
                    fj["lex_halfspace"] = halfspace_json(lex);
                    const auto projected = tropicalize_facet_projected(F);
                    if (!(projected == project_halfspace(lex)))
                        throw InternalError("projected and lex tropicalizations disagree");
                    fj["tropical_halfspace"] = halfspace_json(projected);
                }, "facets");
            break;
        }
    }
    timer.mark(out, "elapsed_ms");
    return dump(out);
}

VerifyResult cmd_verify(const InstanceFile& inst, const CommandOptions& opts) {
    const PolytopeRat P = inst.polytope();
    const std::uint64_t seed = effective_seed(inst, opts);
    StageTimer timer(opts.timing);
    const VerificationReport rep = theorem_pipeline(P, seed, opts.budget);

    ordered_json out;
    out["schema"] = 1;
    out["command"] = "verify";
    out["seed"] = rep.seed;
    out["pass"] = rep.pass;
    out["gamma_attempts"] = rep.gamma_attempts;
    out["stages"] = ordered_json::array();
    for (const auto& s : rep.stages) {
        ordered_json sj;
        sj["name"] = s.name;
        sj["pass"] = s.pass;
        if (!s.note.empty()) sj["note"] = s.note;
        out["stages"].push_back(std::move(sj));
    }
    out["certificate"] = rep.certificate ? ordered_json(*rep.certificate) : ordered_json(nullptr);
    out["gammas"] = rep.gammas;
    if (rep.perturbed) {
        out["perturbed_generators"] = ordered_json::array();
        for (const auto& g : rep.perturbed->generators())
            out["perturbed_generators"].push_back(point_json(g));
    }
    out["perturbed_representation"] = ordered_json::array();
    for (const auto& h : rep.representation_perturbed)
        out["perturbed_representation"].push_back(halfspace_json(h));
    out["projected_representation"] = ordered_json::array();
    for (const auto& h : rep.representation_projected)
        out["projected_representation"].push_back(halfspace_json(h));
    if (rep.lift) {
        out["lift_generators"] = ordered_json::array();
        for (const auto& row : rep.lift->generators())
            out["lift_generators"].push_back(series_row_json(row));
    }
    out["facets"] = ordered_json::array();
    for (const auto& F : rep.facets) {
        ordered_json fj;
        fj["support"] = indices_json(F.support);
        fj["normal"] = series_row_json(F.normal);
        fj["tropical_halfspace"] = halfspace_json(tropicalize_facet_projected(F));
        out["facets"].push_back(std::move(fj));
    }
    out["facet_halfspaces"] = ordered_json::array();
    for (const auto& h : rep.facet_halfspaces)
        out["facet_halfspaces"].push_back(halfspace_json(h));
    timer.mark(out, "elapsed_ms");
    return {rep.pass ? 0 : 3, dump(out)};
}

std::string cmd_svg(const InstanceFile& inst, const CommandOptions& opts) {
    SvgOptions svg_opts;
    svg_opts.halfspaces = opts.halfspaces;
    return render_svg(inst.polytope(), svg_opts, opts.budget);
}

}  // namespace tropifacet
