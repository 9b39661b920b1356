#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtw1/cycles.hpp"
#include "dtw1/decomposition.hpp"
#include "dtw1/dtw1.hpp"
#include "dtw1/enumerate.hpp"
#include "dtw1/games.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/hypertree_width.hpp"
#include "dtw1/io.hpp"
#include "dtw1/minor_search.hpp"
#include "dtw1/random.hpp"

namespace dtw1 {

struct SuiteConfig {
    std::uint64_t seed = 20240611;
    std::size_t cycle_cap = kDefaultCycleCap;
    long long game_cap = kDefaultGamePositionCap;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    long checked = 0;
    long skipped = 0;
    long failures = 0;
    double seconds = 0;
    double time_limit = 0;  // 0: none
    std::string first_failure;

    bool pass() const { return failures == 0 && (time_limit <= 0 || seconds <= time_limit); }
};

/// One analysed instance of the dtw-1 equivalence suites.
struct SuiteInstance {
    Digraph d;
    Dtw1Certificate cert;
};

class Suite {
public:
    explicit Suite(SuiteConfig cfg = {}) : cfg_(cfg) {}

    const SuiteConfig& config() const { return cfg_; }

    CriterionResult run(int id) {
        switch (id) {
            case 1: return timed(1, "dtw1 equivalence, exhaustive n<=4", 120, [&](CriterionResult& r) { equivalence(exhaustive(), r, true); });
            case 2: return timed(2, "dtw1 equivalence, random n in {5,6}", 300, [&](CriterionResult& r) { equivalence(randomized(), r, false); });
            case 3: return timed(3, "havens force robber win against 2 cops", 0, [&](CriterionResult& r) { havens_vs_game(r); });
            case 4: return timed(4, "dbw equals hbw of the dual, n<=5", 600, [&](CriterionResult& r) { dbw_vs_hbw(r); });
            case 5: return timed(5, "width-1 dtd converts to dbd of width <= 2", 0, [&](CriterionResult& r) { dtd_to_dbd_check(r); });
            case 6: return timed(6, "dtd converts to ghd of width <= dtw+1", 0, [&](CriterionResult& r) { dtd_to_ghd_check(r); });
            case 7: return timed(7, "dbd strategy wins with <= 3k cops", 0, [&](CriterionResult& r) { strategies(r); });
            case 8: return timed(8, "chain connectivity equals strong connectivity", 0, [&](CriterionResult& r) { chains(r); });
            case 9: return timed(9, "component bijection and linked vs hyperlinked", 0, [&](CriterionResult& r) { linked(r); });
            case 10: return timed(10, "five hypertree characterisations agree", 180, [&](CriterionResult& r) { hypertrees(r); });
            case 11: return timed(11, "named instances", 0, [&](CriterionResult& r) { named(r); });
            default: throw PreconditionError("no criterion " + std::to_string(id));
        }
    }

    static constexpr int kCriteria = 11;

    /// Labeled strongly connected digraphs on 2..4 vertices with their certificates.
    const std::vector<SuiteInstance>& exhaustive() {
        if (!exhaustive_) {
            exhaustive_.emplace();
            for (int n = 2; n <= 4; ++n)
                for_each_labeled_digraph(n, [&](const Digraph& d) {
                    if (is_strongly_connected(d)) exhaustive_->push_back({d, recognize_dtw1(d, cfg_.cycle_cap)});
                });
        }
        return *exhaustive_;
    }

    /// 300 random strongly connected digraphs, 50 per (n, p) with n ∈ {5,6}, p ∈ {0.2,0.4,0.6}.
    const std::vector<SuiteInstance>& randomized() {
        if (!random_) {
            random_.emplace();
            Rng rng(cfg_.seed);
            for (int n : {5, 6})
                for (double p : {0.2, 0.4, 0.6})
                    for (int i = 0; i < 50; ++i) {
                        Digraph d = random_strong_digraph(n, p, rng);
                        random_->push_back({d, recognize_dtw1(d, cfg_.cycle_cap)});
                    }
        }
        return *random_;
    }

private:
    SuiteConfig cfg_;
    std::optional<std::vector<SuiteInstance>> exhaustive_;
    std::optional<std::vector<SuiteInstance>> random_;

    static void fail(CriterionResult& r, const std::string& what) {
        if (r.failures++ == 0) r.first_failure = what;
    }

    static std::string show(const Digraph& d) {
        std::ostringstream out;
        for (auto e : d.edges()) out << e.tail << ">" << e.head << " ";
        return out.str();
    }

    /// Runs one check; caps count as skipped, any other exception as a failure.
    template <class F>
    static void guarded(CriterionResult& r, const std::string& label, F&& f) {
        try {
            ++r.checked;
            f();
        } catch (const CapExceeded&) {
            --r.checked;
            ++r.skipped;
        } catch (const InstanceTooLarge&) {
            --r.checked;
            ++r.skipped;
        } catch (const std::exception& e) {
            fail(r, label + ": exception: " + e.what());
        }
    }

    template <class F>
    CriterionResult timed(int id, const std::string& name, double limit, F&& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.time_limit = limit;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            fail(r, std::string("aborted: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

    std::vector<const SuiteInstance*> all_instances() {
        std::vector<const SuiteInstance*> out;
        for (const auto& i : exhaustive()) out.push_back(&i);
        for (const auto& i : randomized()) out.push_back(&i);
        return out;
    }

    void equivalence(const std::vector<SuiteInstance>& instances, CriterionResult& r, bool) {
        for (const auto& inst : instances) {
            const auto& d = inst.d;
            guarded(r, show(d), [&] {
                bool yes = inst.cert.verdict == Verdict::Yes;
                auto route = hypertree_route(d, cfg_.cycle_cap);
                bool minor = has_forbidden_minor(d);
                if (yes != route.is_hypertree) return fail(r, show(d) + ": recogniser and hypertree route disagree");
                if (yes == minor) return fail(r, show(d) + ": recogniser and minor search disagree");
                if (all_pieces_small(s_decomposition(d, SplitOrder::Reverse)) != yes)
                    return fail(r, show(d) + ": verdict depends on split order");
                auto check = verify_certificate(d, inst.cert);
                if (!check.ok) return fail(r, show(d) + ": certificate: " + check.error);
                if (route.decomposition) {
                    auto rep = validate_dtd(d, *route.decomposition);
                    if (!rep.valid || rep.width > 1) return fail(r, show(d) + ": hypertree-route dtd invalid");
                }
                std::stringstream text;
                write_certificate(text, d, inst.cert);
                auto parsed = parse_certificate(text, d);
                if (parsed.hash != hash_text(canonical_hash(d)) || !verify_certificate(d, parsed.cert).ok)
                    return fail(r, show(d) + ": serialized certificate does not verify");
            });
        }
    }

    void havens_vs_game(CriterionResult& r) {
        for (const auto& inst : exhaustive()) {
            if (inst.cert.verdict != Verdict::No) continue;
            guarded(r, show(inst.d), [&] {
                if (solve_game(inst.d, 2, cfg_.game_cap).cops_win) fail(r, show(inst.d) + ": 2 cops win on a NO instance");
            });
        }
    }

    void dbw_vs_hbw(CriterionResult& r) {
        for (int n = 2; n <= 5; ++n)
            for (const auto& d : digraph_isomorphism_classes(n)) {
                if (!is_strongly_connected(d)) continue;
                CycleHypergraph ch;
                try {
                    ch = cycle_hypergraph(d, 12);
                } catch (const CapExceeded&) {
                    continue;  // outside the ≤ 12 cycle scope
                }
                guarded(r, show(d), [&] {
                    auto [dbw, dbd] = exact_dbw(d, cfg_.cycle_cap);
                    auto h = dual_cycle_hypergraph(ch);
                    auto [hbw, hbd] = exact_hbw(h);
                    if (dbw != hbw) return fail(r, show(d) + ": dbw " + std::to_string(dbw) + " != hbw " + std::to_string(hbw));
                    auto rd = validate_dbd(d, dbd, dbw, cfg_.cycle_cap);
                    auto rh = validate_hbd(h, hbd, hbw);
                    if (!rd.valid || rd.width != dbw) return fail(r, show(d) + ": optimal dbd does not validate");
                    if (!rh.valid || rh.width != hbw) return fail(r, show(d) + ": optimal hbd does not validate");
                });
            }
    }

    void dtd_to_dbd_check(CriterionResult& r) {
        for (const auto* inst : all_instances()) {
            if (inst->cert.verdict != Verdict::Yes) continue;
            guarded(r, show(inst->d), [&] {
                auto dbd = dtd_to_dbd(inst->d, *inst->cert.decomposition, cfg_.cycle_cap);
                auto rep = validate_dbd(inst->d, dbd, 2, cfg_.cycle_cap);
                if (!rep.valid || rep.width > 2) fail(r, show(inst->d) + ": converted dbd invalid or too wide");
            });
        }
    }

    void dtd_to_ghd_check(CriterionResult& r) {
        for (const auto* inst : all_instances()) {
            guarded(r, show(inst->d), [&] {
                std::vector<DirectedTreeDecomposition> decs;
                if (inst->cert.decomposition) decs.push_back(*inst->cert.decomposition);
                auto route = hypertree_route(inst->d, cfg_.cycle_cap);
                if (route.decomposition) decs.push_back(*route.decomposition);
                DirectedTreeDecomposition trivial;
                trivial.add_node(-1, inst->d.vertices());
                decs.push_back(trivial);
                auto h = dual_cycle_hypergraph(cycle_hypergraph(inst->d, cfg_.cycle_cap));
                for (const auto& dec : decs) {
                    int k = validate_dtd(inst->d, dec).width;
                    auto rep = validate_ghd(h, dtd_to_ghd(inst->d, dec, cfg_.cycle_cap));
                    if (!rep.valid || rep.width > k + 1) return fail(r, show(inst->d) + ": ghd invalid or too wide");
                }
            });
        }
    }

    void strategies(CriterionResult& r) {
        for (const auto* inst : all_instances()) {
            const auto& d = inst->d;
            guarded(r, show(d), [&] {
                std::vector<DirectedBranchDecomposition> decs;
                auto [w, best] = exact_dbw(d, cfg_.cycle_cap);
                if (w <= 2) decs.push_back(best);
                if (inst->cert.decomposition) decs.push_back(dtd_to_dbd(d, *inst->cert.decomposition, cfg_.cycle_cap));
                for (const auto& dec : decs) {
                    auto rep = validate_dbd(d, dec, 2, cfg_.cycle_cap);
                    if (!rep.valid) continue;
                    int k = std::max(rep.width, 1);
                    auto s = strategy_from_dbd(d, dec);
                    auto c = check_strategy(d, s);
                    if (!c.wins) return fail(r, show(d) + ": strategy loses");
                    if (c.max_cops > 3 * k || s.budget > 3 * k) return fail(r, show(d) + ": strategy exceeds 3k cops");
                }
            });
        }
    }

    void chains(CriterionResult& r) {
        auto one = [&](const Digraph& d) {
            guarded(r, show(d), [&] {
                if (strongly_connected_via_chains(d, cfg_.cycle_cap) != is_strongly_connected(d))
                    fail(r, show(d) + ": chain connectivity disagrees");
            });
        };
        for (int n = 1; n <= 4; ++n) for_each_labeled_digraph(n, one);
        Rng rng(cfg_.seed + 8);
        for (int i = 0; i < 200; ++i) one(random_digraph(uniform_int(rng, 5, 6), 0.2 + 0.1 * (i % 5), rng));
    }

    void linked(CriterionResult& r) {
        Rng rng(cfg_.seed + 9);
        for (int i = 0; i < 200; ++i) {
            int n = uniform_int(rng, 2, 5);
            Digraph d = random_strong_digraph(n, 0.3 + 0.1 * (i % 4), rng);
            VertexSet s, w;
            for (int v = 0; v < n; ++v) {
                if (uniform_int(rng, 0, 3) == 0) s.insert(v);
                if (uniform_int(rng, 0, 1) == 0) w.insert(v);
            }
            if (w.size() < 2) w = w | VertexSet::single(0) | VertexSet::single(1);
            int k = uniform_int(rng, 0, 2);
            guarded(r, show(d), [&] {
                auto ch = cycle_hypergraph(d, cfg_.cycle_cap);
                Hypergraph h = dual(ch.hypergraph);
                std::vector<int> s_edges, w_edges;
                for (int v : s) s_edges.push_back(ch.hyper_id(v));
                for (int v : w) w_edges.push_back(ch.hyper_id(v));
                auto removed = edge_union(h, s_edges);
                auto comps = hypergraph_components(h, removed);
                std::vector<std::vector<int>> images;
                for (auto k_set : strong_components_within(d, d.vertices() - s)) {
                    if (k_set.size() < 2) continue;
                    std::vector<int> ids;
                    for (int v : k_set) ids.push_back(ch.hyper_id(v));
                    std::vector<int> img;
                    for (int c : edge_union(h, ids))
                        if (!std::binary_search(removed.begin(), removed.end(), c)) img.push_back(c);
                    images.push_back(img);
                }
                std::sort(images.begin(), images.end());
                if (images != comps) return fail(r, show(d) + ": component map is not a bijection");
                bool lk = is_k_linked(d, w, k);
                if (lk && !is_k_hyperlinked(h, w_edges, k)) return fail(r, show(d) + ": linked but not hyperlinked");
                if (lk != is_k_hyperlinked(h, w_edges, k + 1))
                    return fail(r, show(d) + ": linked and hyperlinked disagree at matching thresholds");
            });
        }
    }

    static std::vector<bool> characterisations(const Hypergraph& h) {
        Hypergraph hd = dual(h);
        auto hw = exact_hw(hd, 1);
        return {hypertree_witness(h).has_value(),
                has_helly(h) && is_chordal(line_graph(h)),
                is_conformal(hd) && is_chordal(two_section(hd)),
                is_alpha_acyclic(hd),
                hw.has_value() && hw->first == 1};
    }

    void hypertrees(CriterionResult& r) {
        auto agree = [&](const Hypergraph& h, const std::string& label) {
            guarded(r, label, [&] {
                auto c = characterisations(h);
                for (bool b : c)
                    if (b != c[0]) return fail(r, label + ": hypertree characterisations disagree");
            });
        };
        Rng rng(cfg_.seed + 10);
        for (int i = 0; i < 500; ++i) {
            int nv = uniform_int(rng, 1, 6), ne = uniform_int(rng, 1, 6);
            agree(random_hypergraph(nv, ne, rng, 0.2 + 0.1 * (i % 5)), "random hypergraph " + std::to_string(i));
        }
        for (const auto& inst : exhaustive()) {
            auto ch = cycle_hypergraph(inst.d, cfg_.cycle_cap);
            agree(ch.hypergraph, "C(D) of " + show(inst.d));
            agree(dual(ch.hypergraph), "dual C(D) of " + show(inst.d));
        }
    }

    void named(CriterionResult& r) {
        auto expect = [&](const std::string& label, bool ok) {
            ++r.checked;
            if (!ok) fail(r, label);
        };
        auto yes = [&](const Digraph& d) {
            auto c = recognize_dtw1(d, cfg_.cycle_cap);
            return c.verdict == Verdict::Yes && verify_certificate(d, c).ok;
        };
        Digraph digon = bidirect(2, {{0, 1}});
        expect("digon has dtw 1", yes(digon));
        Digraph c3(3);
        c3.add_edge(0, 1);
        c3.add_edge(1, 2);
        c3.add_edge(2, 0);
        expect("directed C3 has dtw 1", yes(c3));
        auto bc3 = bidirect(3, {{0, 1}, {1, 2}, {2, 0}});
        auto cert = recognize_dtw1(bc3, cfg_.cycle_cap);
        expect("bidirected C3 is NO with Bicycle(3)", cert.verdict == Verdict::No && cert.witness->kind == PatternKind::Bicycle &&
                                                          cert.witness->length == 3 && verify_certificate(bc3, cert).ok);
        auto a4 = pattern_digraph(PatternKind::A4, 4);
        auto ca4 = recognize_dtw1(a4, cfg_.cycle_cap);
        expect("A4 is NO with an A4 witness", ca4.verdict == Verdict::No && ca4.witness->kind == PatternKind::A4 &&
                                                  verify_certificate(a4, ca4).ok);
        expect("dcn(A4) = 3", dcn_exact(a4, 4, cfg_.game_cap) == 3);
        Rng rng(cfg_.seed + 11);
        for (int i = 0; i < 5; ++i) {
            Digraph t = random_bidirected_tree(uniform_int(rng, 2, 7), rng);
            expect("bidirected tree " + show(t) + " has dtw 1", yes(t));
            Digraph s = random_subdivision(t, uniform_int(rng, 1, 4), rng);
            expect("subdivided tree " + show(s) + " has dtw 1", yes(s));
        }
    }
};

inline void print_suite_header(std::ostream& out, const SuiteConfig& cfg) {
    out << "dtw1-suite v1 seed=" << cfg.seed << " cycle-cap=" << cfg.cycle_cap << " game-cap=" << cfg.game_cap << "\n";
}

inline void print_criterion(std::ostream& out, const CriterionResult& r, bool with_time = true) {
    out << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " checked=" << r.checked
        << " skipped=" << r.skipped << " failures=" << r.failures;
    if (with_time) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
        out << " time=" << buf << "s";
        if (r.time_limit > 0) out << " limit=" << r.time_limit << "s";
    }
    if (!r.first_failure.empty()) out << " first-failure=\"" << r.first_failure << "\"";
    out << "\n";
}

}  // namespace dtw1
