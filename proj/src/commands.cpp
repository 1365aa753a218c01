#include "eigenposet/commands.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eigenposet/ddivisible.hpp"
#include "eigenposet/eigenposet.hpp"
#include "eigenposet/shelling.hpp"
#include "eigenposet/sym_char.hpp"

namespace eigenposet {
namespace {

using nlohmann::json;

struct BuiltPoset {
    PartitionPoset poset;
    std::vector<std::string> atom_words;
};

GroupParams params_of(const CommandRequest& r) { return GroupParams::make(r.m, r.p, r.n, r.d); }

BuildOptions options_of(const CommandRequest& r)
{
    BuildOptions options;
    options.budget = r.budget;
    return options;
}

BuiltPoset build_requested(const CommandRequest& r)
{
    BuiltPoset built;
    if (r.poset == "eigen") {
        const GroupParams params = params_of(r);
        built.poset = build_E(params, options_of(r)).poset;
        for (const auto& word : maximal_eigenspace_words(params, options_of(r))) built.atom_words.push_back(word.to_string());
    } else if (r.poset == "balanced") {
        require(r.d >= 1 && r.n >= 1, "balanced poset needs n, d >= 1");
        built.poset = balanced_poset(r.n, r.d, r.budget);
    } else if (r.poset == "dowling") {
        require(r.d >= 1 && r.n >= 1, "Dowling lattice needs n, d >= 1");
        built.poset = dowling_lattice(r.n, r.d, r.budget);
    } else if (r.poset == "pointed") {
        built.poset = build_pointed_ddivisible(r.n, r.d, r.budget).poset;
    } else {
        throw InvalidArgument("unknown poset kind '" + r.poset + "'");
    }
    return built;
}

json params_json(const CommandRequest& r)
{
    if (r.poset == "eigen") return json{{"m", r.m}, {"p", r.p}, {"n", r.n}, {"d", r.d}};
    return json{{"n", r.n}, {"d", r.d}};
}

json envelope(const CommandRequest& r)
{
    json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["poset_kind"] = r.poset;
    j["params"] = params_json(r);
    return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CommandResult emit(const CommandRequest& r, json j, const std::string& text, bool verified = true)
{
    j["verified"] = verified;
    if (r.format == "json") return {verified, j.dump(2) + "\n"};
    return {verified, text};
}

json betti_json(const BettiVector& betti)
{
    json j = json::object();
    for (int k = BettiVector::kMinDegree; k <= betti.max_degree(); ++k)
        if (betti[k] != 0) j[std::to_string(k)] = betti[k];
    return j;
}

CommandResult cmd_build(const CommandRequest& r)
{
    const BuiltPoset built = build_requested(r);
    const FinitePoset& order = built.poset.order();
    if (r.format == "dot") return {true, order.to_dot()};
    if (r.format == "json") {
        json j = envelope(r);
        j["poset"] = json::parse(order.to_json());
        if (r.poset == "eigen") j["atoms"] = built.atom_words;
        return {true, j.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "elements " << order.size() << "\ncovers " << order.covers().size() << '\n';
    const auto rank = order.rank_function();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (rank) out << (*rank)[i] << '\t';
        out << order.label(static_cast<int>(i)) << '\n';
    }
    return {true, out.str()};
}

CommandResult cmd_betti(const CommandRequest& r)
{
    const BuiltPoset built = build_requested(r);
    const BettiVector betti = betti_reduced(built.poset.order().without_bounds(), r.budget);
    json j = envelope(r);
    j["betti"] = betti_json(betti);
    return emit(r, j, "reduced betti of proper part: " + betti.to_string() + "\n");
}

CommandResult cmd_moebius(const CommandRequest& r)
{
    const BuiltPoset built = build_requested(r);
    const FinitePoset& order = built.poset.order();
    const FinitePoset bounded = order.bottom() ? order : order.with_bottom();
    const std::int64_t mu = moebius(bounded, *bounded.bottom(), *bounded.top());
    json j = envelope(r);
    j["moebius"] = mu;
    return emit(r, j, "mu(bottom, top) = " + std::to_string(mu) + "\n");
}

CommandResult cmd_rao(const CommandRequest& r)
{
    const GroupParams params = params_of(r);
    require(params.d > 1, "rao-check needs d > 1");
    const AtomOrdering ordering = lex_atom_order(params, options_of(r));
    std::string sagan;
    bool sagan_ok = false;
    try {
        const RaoReport report = check_rao_sagan(ordering);
        sagan_ok = report.holds;
        sagan = report.holds ? "holds" : report.message;
    } catch (const PreconditionViolated& e) {
        sagan = std::string("precondition fails: ") + e.what();
    }
    const RaoReport recursive = check_rao_recursive(ordering, r.budget);
    json j = envelope(r);
    j["atoms"] = ordering.atoms.size();
    j["sagan"] = sagan_ok;
    j["recursive"] = recursive.holds;
    std::ostringstream out;
    out << "atoms " << ordering.atoms.size() << "\nsagan criterion: " << sagan
        << "\nrecursive atom ordering: " << (recursive.holds ? "holds" : recursive.message) << '\n';
    return emit(r, j, out.str(), sagan_ok && recursive.holds);
}

CommandResult cmd_witness(const CommandRequest& r)
{
    const WitnessSummary summary = check_all_witnesses(params_of(r), options_of(r));
    json j = envelope(r);
    j["pairs"] = summary.pairs;
    j["cases"] = {{"1", summary.fixed_letter}, {"2a", summary.cross}, {"2b", summary.diagonal}};
    std::ostringstream out;
    out << "pairs " << summary.pairs << "\ncase 1  " << summary.fixed_letter << "\ncase 2a " << summary.cross
        << "\ncase 2b " << summary.diagonal << "\nall witnesses verified\n";
    return emit(r, j, out.str());
}

CommandResult cmd_geometric(const CommandRequest& r)
{
    const BuiltPoset built = build_requested(r);
    const bool ok = check_geometric_upper_intervals(built.poset.order());
    json j = envelope(r);
    j["geometric_upper_intervals"] = ok;
    return emit(r, j, std::string("upper intervals geometric: ") + yes_no(ok) + "\n", ok);
}

CommandResult cmd_independence(const CommandRequest& r)
{
    require(r.d2.has_value(), "independence needs --d2");
    const IndependenceResult result = independence_check(params_of(r), *r.d2, options_of(r));
    json j = envelope(r);
    j["d2"] = *r.d2;
    j["posets_equal"] = result.posets_equal;
    j["degree_sets_equal"] = result.degree_sets_equal;
    std::ostringstream out;
    out << "posets equal: " << yes_no(result.posets_equal) << "\ndegree sets equal: " << yes_no(result.degree_sets_equal)
        << "\nagree: " << yes_no(result.agrees()) << '\n';
    return emit(r, j, out.str(), result.agrees());
}

CommandResult cmd_classify(const CommandRequest& r)
{
    const ArrangementClass c = classify_arrangement(params_of(r));
    json j = envelope(r);
    j["verdict"] = to_string(c.verdict);
    j["detail"] = c.detail;
    std::string text = to_string(c.verdict);
    if (!c.detail.empty()) text += " " + c.detail;
    return emit(r, j, text + "\n");
}

CommandResult cmd_complement(const CommandRequest& r)
{
    const auto cohomology = complement_cohomology(params_of(r), options_of(r));
    json j = envelope(r);
    j["reduced_cohomology"] = cohomology;
    std::ostringstream out;
    for (std::size_t k = 0; k < cohomology.size(); ++k)
        if (cohomology[k] != 0) out << "H~^" << k << " = " << cohomology[k] << '\n';
    if (out.str().empty()) out << "all reduced cohomology vanishes\n";
    return emit(r, j, out.str());
}

CommandResult cmd_table3(const CommandRequest& r)
{
    json j = envelope(r);
    json rows = json::object();
    for (int n = 2; n <= r.max_n; ++n)
        for (int d = 2; d <= n; ++d) rows[std::to_string(n)][std::to_string(d)] = sphere_count(n, d);
    j["table"] = rows;
    return emit(r, j, table3_text(r.max_n));
}

CommandResult cmd_specht(const CommandRequest& r)
{
    const CharacterVector chi = top_homology_character(balanced_poset(r.n, r.d, r.budget), r.budget);
    const Decomposition parts = decompose(chi);
    bool nonnegative = true;
    json j = envelope(r);
    json mult = json::object();
    std::ostringstream out;
    for (const auto& [lambda, m] : parts) {
        nonnegative = nonnegative && m > 0;
        mult[to_string(lambda)] = m;
        out << to_string(lambda) << " : " << m << '\n';
    }
    j["dimension"] = chi.degree();
    j["multiplicities"] = mult;
    out << "dimension " << chi.degree() << '\n';
    return emit(r, j, out.str(), nonnegative);
}

std::vector<int> ribbon_composition(int n, int d)
{
    const int a = n / d;
    std::vector<int> composition{n - d * a};
    for (int i = 0; i < a; ++i) composition.push_back(d);
    return composition;
}

bool ribbon_matches(int n, int d, std::uint64_t budget, CharacterVector* computed = nullptr)
{
    const CharacterVector chi = top_homology_character(build_pointed_ddivisible(n, d, budget).poset, budget);
    if (computed) *computed = chi;
    if (n % d == 0) return chi.is_zero();
    return chi == ribbon_character(ribbon_composition(n, d));
}

CommandResult cmd_ribbon(const CommandRequest& r)
{
    CharacterVector chi;
    const bool ok = ribbon_matches(r.n, r.d, r.budget, &chi);
    json j = envelope(r);
    j["matches"] = ok;
    j["dimension"] = chi.degree();
    std::ostringstream out;
    if (r.n % r.d == 0) out << "d divides n: expected zero module\n";
    else {
        out << "ribbon composition";
        for (int part : ribbon_composition(r.n, r.d)) out << ' ' << part;
        out << '\n';
    }
    out << "dimension " << chi.degree() << "\nmatches: " << yes_no(ok) << '\n';
    return emit(r, j, out.str(), ok);
}

CommandResult cmd_zeroing(const CommandRequest& r)
{
    const ZeroingMap z = zeroing_poset_map(r.n, r.d, r.budget);
    const TopMapReport report = induced_top_map_surjective(r.n, r.d, r.budget);
    json j = envelope(r);
    j["map_verified"] = z.verified();
    j["atom_fibers"] = z.atom_fibers;
    j["degree"] = report.degree;
    j["source_dim"] = report.dims.first;
    j["target_dim"] = report.dims.second;
    j["rank"] = report.rank;
    j["surjective"] = report.surjective;
    std::ostringstream out;
    out << "zeroing map: order-preserving, rank-preserving, surjective, equivariant\n"
        << "top degree " << report.degree << "\nsource dim " << report.dims.first << "\ntarget dim " << report.dims.second
        << "\ninduced rank " << report.rank << "\nverdict " << (report.surjective ? "surjective" : "not surjective") << '\n';
    return emit(r, j, out.str());
}

struct SelfCheck {
    std::string name;
    std::function<bool()> run;
};

std::vector<SelfCheck> self_checks(std::uint64_t budget)
{
    std::vector<SelfCheck> checks;
    checks.push_back({"sphere count matches homology (n<=5)", [budget] {
        for (int n = 2; n <= 5; ++n)
            for (int d = 2; d <= n; ++d) {
                const int a = n / d;
                const BettiVector b = betti_reduced(balanced_poset(n, d, budget).order().without_bounds(), budget);
                const std::int64_t expected = sphere_count(n, d);
                if (b[a - 1] != expected || (expected != 0 && b.concentrated_degree() != a - 1)) return false;
            }
        return true;
    }});
    checks.push_back({"character table orthogonality (n<=6)", [] {
        for (int n = 1; n <= 6; ++n) {
            const auto shapes = partitions_of(n);
            for (const auto& a : shapes)
                for (const auto& b : shapes)
                    if (inner_product(CharacterVector::irreducible(a), CharacterVector::irreducible(b)) != (a == b ? 1 : 0))
                        return false;
        }
        return true;
    }});
    checks.push_back({"a(d)=1 character identity (n<=6)", [budget] {
        for (int n = 2; n <= 6; ++n)
            for (int d = n / 2 + 1; d <= n; ++d)
                if (top_homology_character(balanced_poset(n, d, budget), budget) != induced_cyclic_character(n, d)) return false;
        return true;
    }});
    checks.push_back({"geometric intervals and atom orderings", [budget] {
        const std::vector<std::array<int, 4>> cases{{1, 1, 4, 2}, {1, 1, 5, 3}, {2, 2, 4, 2}, {3, 3, 3, 2}, {4, 4, 2, 4}};
        for (const auto& [m, p, n, d] : cases) {
            BuildOptions options;
            options.budget = budget;
            const EigenPoset E = build_E(GroupParams::make(m, p, n, d), options);
            if (!check_geometric_upper_intervals(E.poset.order())) return false;
            const AtomOrdering ordering = lex_atom_order(E);
            if (!verify_rao_sagan(ordering) || !verify_rao_recursive(ordering, budget)) return false;
            check_all_witnesses(E.params, options);
        }
        return true;
    }});
    checks.push_back({"upper ideal equals brute force", [budget] {
        for (const auto& [m, p, n, d] : std::vector<std::array<int, 4>>{{1, 1, 4, 2}, {2, 1, 3, 4}, {4, 4, 2, 2}}) {
            const GroupParams params = GroupParams::make(m, p, n, d);
            auto built = build_E(params).poset.elements();
            std::sort(built.begin(), built.end());
            if (built != brute_force_eigenspaces(params, budget)) return false;
        }
        return true;
    }});
    checks.push_back({"classifier verdicts follow a(d)", [] {
        for (int m = 1; m <= 4; ++m)
            for (int p = 1; p <= m; ++p) {
                if (m % p) continue;
                for (int n = 2; n <= 4; ++n)
                    for (int d = 1; d <= 8; ++d) {
                        const GroupParams params = GroupParams::make(m, p, n, d);
                        const int a = a_of_d(params);
                        const auto v = classify_arrangement(params).verdict;
                        if ((v == ArrangementVerdict::EqualsReflectionArrangement) != (a == n)) return false;
                        if ((v == ArrangementVerdict::FreeKPi1Hyperplane) != (a == n - 1)) return false;
                    }
            }
        return true;
    }});
    checks.push_back({"independence for I2(4)", [] {
        return same_subspace_poset(build_E(GroupParams::make(4, 4, 2, 1)).poset, build_E(GroupParams::make(4, 4, 2, 2)).poset);
    }});
    checks.push_back({"zeroing map and erase isomorphism (n<=5)", [budget] {
        for (int n = 2; n <= 5; ++n)
            for (int d = 2; d <= n; ++d) {
                zeroing_poset_map(n, d, budget);
                const auto iso = check_erase_isomorphism(n, d, budget);
                if (iso.applicable && !iso.holds()) return false;
            }
        return true;
    }});
    checks.push_back({"ribbon characters (n<=5)", [budget] {
        for (int n = 2; n <= 5; ++n)
            for (int d : {2, 3})
                if (n >= d && !ribbon_matches(n, d, budget)) return false;
        return true;
    }});
    return checks;
}

CommandResult cmd_selftest(const CommandRequest& r)
{
    bool all = true;
    std::ostringstream out;
    json results = json::object();
    for (const auto& check : self_checks(r.budget)) {
        bool ok = false;
        std::string note;
        try {
            ok = check.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        all = all && ok;
        results[check.name] = ok;
        out << (ok ? "PASS " : "FAIL ") << check.name << note << '\n';
    }
    json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["checks"] = results;
    j["verified"] = all;
    if (r.format == "json") return {all, j.dump(2) + "\n"};
    return {all, out.str()};
}

}  // namespace

std::string table3_text(int max_n)
{
    require(max_n >= 2, "table3 needs max-n >= 2");
    std::ostringstream out;
    out << "n\\d";
    for (int d = 2; d <= max_n; ++d) out << '\t' << d;
    out << '\n';
    for (int n = 2; n <= max_n; ++n) {
        out << n;
        for (int d = 2; d <= n; ++d) out << '\t' << sphere_count(n, d);
        out << '\n';
    }
    return out.str();
}

CommandResult run_command(const CommandRequest& r)
{
    require(r.format == "text" || r.format == "json" || r.format == "dot", "format must be text, json or dot");
    require(r.budget > 0, "budget must be positive");
    require(r.n >= 1 && r.d >= 1 && r.m >= 1 && r.p >= 1, "parameters must be positive");
    using Handler = CommandResult (*)(const CommandRequest&);
    static const std::vector<std::pair<std::string, Handler>> handlers{
        {"build", cmd_build},
        {"betti", cmd_betti},
        {"moebius", cmd_moebius},
        {"rao-check", cmd_rao},
        {"witness-check", cmd_witness},
        {"geometric-check", cmd_geometric},
        {"independence", cmd_independence},
        {"classify", cmd_classify},
        {"complement", cmd_complement},
        {"table3", cmd_table3},
        {"specht", cmd_specht},
        {"ribbon-check", cmd_ribbon},
        {"zeroing-conjecture", cmd_zeroing},
        {"selftest", cmd_selftest},
    };
    if (r.command == "dot") {
        CommandRequest dot = r;
        dot.format = "dot";
        return cmd_build(dot);
    }
    for (const auto& [name, handler] : handlers)
        if (name == r.command) {
            if (r.format == "dot" && name != "build") throw InvalidArgument("dot format is only available for build");
            return handler(r);
        }
    throw InvalidArgument("unknown command '" + r.command + "'");
}

}  // namespace eigenposet
