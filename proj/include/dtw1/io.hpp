#pragma once

#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtw1/cycles.hpp"
#include "dtw1/decomposition.hpp"
#include "dtw1/dtw1.hpp"
#include "dtw1/error.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/hypertree_width.hpp"

namespace dtw1 {

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline bool valid_name(const std::string& s) { return !s.empty() && s.find_first_of("{},=") == std::string::npos; }

inline std::string join_set(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + "}";
}

/// Splits "{a,b,c}" into its names; "{}" gives nothing.
inline std::vector<std::string> split_set(const std::string& tok, int line) {
    if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') throw ParseError(line, "expected {..} set, got '" + tok + "'");
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
        if (tok[i] == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += tok[i];
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    for (const auto& n : out)
        if (n.empty()) throw ParseError(line, "empty name in set '" + tok + "'");
    return out;
}

/// Value of a `key=value` token.
inline std::string value_of(const std::string& tok, const std::string& key, int line) {
    if (tok.rfind(key + "=", 0) != 0) throw ParseError(line, "expected " + key + "=..., got '" + tok + "'");
    return tok.substr(key.size() + 1);
}

inline int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace detail

/// Edge-list format: `u v` per line, a lone token declares a vertex, `#` starts
/// a comment. Names (integers included) get dense ids in first-seen order.
inline Digraph parse_edge_list(std::istream& in) {
    Digraph d;
    std::map<std::string, int> ids;
    auto id_of = [&](const std::string& name, int line) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        if (!detail::valid_name(name)) throw ParseError(line, "invalid vertex name '" + name + "'");
        int id = static_cast<int>(ids.size());
        if (id >= kMaxVertices) throw ParseError(line, "more than 64 vertices");
        ids.emplace(name, id);
        d.add_vertex(id);
        d.set_name(id, name);
        return id;
    };
    std::string text;
    for (int line = 1; std::getline(in, text); ++line) {
        auto t = detail::tokens_of(text);
        if (t.empty()) continue;
        if (t.size() > 2) throw ParseError(line, "expected 'u v' or a single vertex name");
        int u = id_of(t[0], line);
        if (t.size() == 1) continue;
        int v = id_of(t[1], line);
        if (u == v) throw ParseError(line, "loop " + t[0] + " -> " + t[0]);
        d.add_edge(u, v);
    }
    return d;
}

inline Digraph parse_edge_list(const std::string& s) {
    std::istringstream in(s);
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Digraph& d) {
    for (int v : d.vertices()) out << d.name(v) << "\n";
    for (auto e : d.edges()) out << d.name(e.tail) << " " << d.name(e.head) << "\n";
}

inline std::string set_text(const Digraph& d, VertexSet s) {
    std::vector<std::string> names;
    for (int v : s) names.push_back(d.name(v));
    return detail::join_set(names);
}

/// Looks vertices up by name.
class NameIndex {
public:
    explicit NameIndex(const Digraph& d) {
        for (int v : d.vertices()) ids_[d.name(v)] = v;
    }
    int id(const std::string& name, int line) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw ParseError(line, "unknown vertex '" + name + "'");
        return it->second;
    }
    VertexSet set(const std::string& tok, int line) const {
        VertexSet s;
        for (const auto& n : detail::split_set(tok, line)) s.insert(id(n, line));
        return s;
    }

private:
    std::map<std::string, int> ids_;
};

/// Hypergraph format: `v <names...>` then one `e <names...>` per hyperedge.
inline Hypergraph parse_hypergraph(std::istream& in) {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::vector<std::vector<int>> edges;
    std::string text;
    int line = 0;
    try {
        for (line = 1; std::getline(in, text); ++line) {
            auto t = detail::tokens_of(text);
            if (t.empty()) continue;
            if (t[0] == "v") {
                for (std::size_t i = 1; i < t.size(); ++i) {
                    if (ids.count(t[i])) throw ParseError(line, "vertex '" + t[i] + "' declared twice");
                    ids[t[i]] = static_cast<int>(names.size());
                    names.push_back(t[i]);
                }
            } else if (t[0] == "e") {
                std::vector<int> e;
                for (std::size_t i = 1; i < t.size(); ++i) {
                    auto it = ids.find(t[i]);
                    if (it == ids.end()) throw ParseError(line, "undeclared vertex '" + t[i] + "'");
                    e.push_back(it->second);
                }
                edges.push_back(e);
            } else {
                throw ParseError(line, "expected a 'v' or 'e' line");
            }
        }
        Hypergraph h(static_cast<int>(names.size()), edges);
        h.vertex_names = names;
        return h;
    } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
    }
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "v";
    for (int v = 0; v < h.num_vertices(); ++v) out << " " << h.vertex_name(v);
    out << "\n";
    for (const auto& e : h.edges()) {
        out << "e";
        for (int v : e) out << " " << h.vertex_name(v);
        out << "\n";
    }
}

/// Cycle dump: `c v1 ... vk` per cycle in canonical rotation.
inline void write_cycles(std::ostream& out, const Digraph& d, const std::vector<DirectedCycle>& cycles) {
    for (const auto& c : cycles) {
        out << "c";
        for (int v : c.sequence) out << " " << d.name(v);
        out << "\n";
    }
}

// Directed tree decompositions: `dtd`, `node <id> bag={..}`, `arc <from> <to> guard={..}`.

inline void write_dtd(std::ostream& out, const Digraph& d, const DirectedTreeDecomposition& dec) {
    out << "dtd\n";
    for (int t = 0; t < dec.size(); ++t) out << "node " << t << " bag=" << set_text(d, dec.bags[t]) << "\n";
    for (int t = 0; t < dec.size(); ++t)
        if (dec.parent[t] >= 0)
            out << "arc " << dec.parent[t] << " " << t << " guard=" << set_text(d, dec.guards[t]) << "\n";
}

namespace detail {

/// Reads dtd node/arc records from token lines (header already consumed).
inline DirectedTreeDecomposition read_dtd_records(const std::vector<std::pair<int, std::vector<std::string>>>& lines,
                                                  const NameIndex& names) {
    DirectedTreeDecomposition dec;
    for (const auto& [line, t] : lines) {
        if (t[0] == "node") {
            if (t.size() != 3) throw ParseError(line, "expected 'node <id> bag={..}'");
            int id = parse_int(t[1], line);
            if (id != dec.size()) throw ParseError(line, "node ids must be 0, 1, 2, ... in order");
            dec.add_node(-1, names.set(value_of(t[2], "bag", line), line));
        } else if (t[0] == "arc") {
            if (t.size() != 4) throw ParseError(line, "expected 'arc <from> <to> guard={..}'");
            int a = parse_int(t[1], line), b = parse_int(t[2], line);
            if (a < 0 || b < 0 || a >= dec.size() || b >= dec.size()) throw ParseError(line, "arc refers to unknown node");
            if (dec.parent[b] != -1) throw ParseError(line, "node " + t[2] + " has two parents");
            dec.parent[b] = a;
            dec.guards[b] = names.set(value_of(t[3], "guard", line), line);
        } else {
            throw ParseError(line, "unexpected record '" + t[0] + "'");
        }
    }
    return dec;
}

inline std::vector<std::pair<int, std::vector<std::string>>> token_lines(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string text;
    for (int line = 1; std::getline(in, text); ++line) {
        auto t = tokens_of(text);
        if (!t.empty()) out.emplace_back(line, t);
    }
    return out;
}

}  // namespace detail

inline DirectedTreeDecomposition parse_dtd(std::istream& in, const Digraph& d) {
    auto lines = detail::token_lines(in);
    if (lines.empty() || lines[0].second != std::vector<std::string>{"dtd"})
        throw ParseError(lines.empty() ? 1 : lines[0].first, "expected 'dtd' header");
    lines.erase(lines.begin());
    return detail::read_dtd_records(lines, NameIndex(d));
}

// Directed branch decompositions: `dbd`, `node <id> leaf=<name>|inner`, `edge <a> <b> hitting={..}`.

inline void write_dbd(std::ostream& out, const Digraph& d, const DirectedBranchDecomposition& dec) {
    out << "dbd\n";
    for (int t = 0; t < dec.tree.size(); ++t)
        out << "node " << t << " " << (dec.tree.item[t] >= 0 ? "leaf=" + d.name(dec.tree.item[t]) : "inner") << "\n";
    for (std::size_t i = 0; i < dec.tree.edges.size(); ++i) {
        out << "edge " << dec.tree.edges[i].first << " " << dec.tree.edges[i].second;
        if (i < dec.hitting_sets.size()) out << " hitting=" << set_text(d, dec.hitting_sets[i]);
        out << "\n";
    }
}

inline DirectedBranchDecomposition parse_dbd(std::istream& in, const Digraph& d) {
    auto lines = detail::token_lines(in);
    if (lines.empty() || lines[0].second != std::vector<std::string>{"dbd"})
        throw ParseError(lines.empty() ? 1 : lines[0].first, "expected 'dbd' header");
    NameIndex names(d);
    DirectedBranchDecomposition dec;
    bool all_witnessed = true;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [line, t] = lines[k];
        if (t[0] == "node" && t.size() == 3) {
            if (detail::parse_int(t[1], line) != dec.tree.size()) throw ParseError(line, "node ids must be consecutive");
            dec.tree.add_node(t[2] == "inner" ? -1 : names.id(detail::value_of(t[2], "leaf", line), line));
        } else if (t[0] == "edge" && (t.size() == 3 || t.size() == 4)) {
            int a = detail::parse_int(t[1], line), b = detail::parse_int(t[2], line);
            if (a < 0 || b < 0 || a >= dec.tree.size() || b >= dec.tree.size()) throw ParseError(line, "unknown node");
            dec.tree.add_edge(a, b);
            if (t.size() == 4) dec.hitting_sets.push_back(names.set(detail::value_of(t[3], "hitting", line), line));
            else all_witnessed = false;
        } else {
            throw ParseError(line, "unexpected record");
        }
    }
    if (!all_witnessed) dec.hitting_sets.clear();
    return dec;
}

// Hyperbranch decompositions over a hypergraph: `hbd`, `node <id> leaf=<edge index>|inner`, `edge <a> <b> cover={..}`.

inline void write_hbd(std::ostream& out, const HyperbranchDecomposition& dec) {
    out << "hbd\n";
    for (int t = 0; t < dec.tree.size(); ++t)
        out << "node " << t << " " << (dec.tree.item[t] >= 0 ? "leaf=" + std::to_string(dec.tree.item[t]) : "inner") << "\n";
    for (std::size_t i = 0; i < dec.tree.edges.size(); ++i) {
        out << "edge " << dec.tree.edges[i].first << " " << dec.tree.edges[i].second;
        if (i < dec.cover_sets.size()) {
            std::vector<std::string> ids;
            for (int e : dec.cover_sets[i]) ids.push_back(std::to_string(e));
            out << " cover=" << detail::join_set(ids);
        }
        out << "\n";
    }
}

// Hypertree decompositions: `ghd`, `node <id> parent=<id|-> bag={..} guard={..}` (vertex and edge names).

inline void write_ghd(std::ostream& out, const Hypergraph& h, const HypertreeDecomposition& dec) {
    out << "ghd\n";
    for (int t = 0; t < dec.size(); ++t) {
        std::vector<std::string> bag, guard;
        for (int v : dec.bags[t]) bag.push_back(h.vertex_name(v));
        for (int e : dec.guards[t]) guard.push_back(h.edge_name(e));
        out << "node " << t << " parent=" << (dec.parent[t] < 0 ? std::string("-") : std::to_string(dec.parent[t]))
            << " bag=" << detail::join_set(bag) << " guard=" << detail::join_set(guard) << "\n";
    }
}

// Certificates.

inline std::string hash_text(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline const char* kCertificateHeader = "dtw1-certificate v1";

inline void write_certificate(std::ostream& out, const Digraph& d, const Dtw1Certificate& cert) {
    out << kCertificateHeader << "\n";
    out << "digraph-hash " << hash_text(canonical_hash(d)) << "\n";
    if (cert.verdict == Verdict::Yes) {
        out << "verdict YES\n";
        const auto& dec = *cert.decomposition;
        out << "width " << dec.width() << "\n";
        for (int t = 0; t < dec.size(); ++t) out << "node " << t << " bag=" << set_text(d, dec.bags[t]) << "\n";
        for (int t = 0; t < dec.size(); ++t)
            if (dec.parent[t] >= 0)
                out << "arc " << dec.parent[t] << " " << t << " guard=" << set_text(d, dec.guards[t]) << "\n";
    } else {
        out << "verdict NO\n";
        const auto& w = *cert.witness;
        if (w.kind == PatternKind::A4) out << "pattern A4\n";
        else out << "pattern bicycle " << w.length << "\n";
        for (const auto& s : w.script) {
            switch (s.kind) {
                case StepKind::DeleteEdge: out << "del " << d.name(s.u) << " " << d.name(s.v) << "\n"; break;
                case StepKind::DeleteVertex: out << "delv " << d.name(s.u) << "\n"; break;
                case StepKind::Contract: out << "contract " << d.name(s.u) << " " << d.name(s.v) << "\n"; break;
            }
        }
        out << "image";
        for (int v : w.image) out << " " << d.name(v);
        out << "\n";
        auto check = verify_minor_witness(d, w);
        for (std::size_t i = 0; i < check.branch_sets.size(); ++i)
            out << "branchset " << i << ": " << set_text(d, check.branch_sets[i]) << "\n";
        for (const auto& n : w.notes) out << "note " << n << "\n";
        if (cert.haven) {
            out << "haven " << cert.haven->order << "\n";
            for (const auto& [bits, comp] : cert.haven->assignment)
                out << "h " << set_text(d, VertexSet(bits)) << " " << set_text(d, comp) << "\n";
        }
    }
    out << "end\n";
}

/// The digraph-hash field of a certificate, read without resolving any names.
inline std::optional<std::string> certificate_hash(std::istream& in) {
    std::string text;
    while (std::getline(in, text)) {
        auto t = detail::tokens_of(text);
        if (t.size() == 2 && t[0] == "digraph-hash") return t[1];
    }
    return std::nullopt;
}

struct ParsedCertificate {
    std::string hash;
    Dtw1Certificate cert;
    std::vector<VertexSet> branch_sets;
};

inline ParsedCertificate parse_certificate(std::istream& in, const Digraph& d) {
    auto lines = detail::token_lines(in);
    ParsedCertificate pc;
    NameIndex names(d);
    std::size_t k = 0;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) throw ParseError(k < lines.size() ? lines[k].first : 0, msg);
    };
    need(k < lines.size() && lines[k].second == std::vector<std::string>{"dtw1-certificate", "v1"},
         "expected certificate header");
    ++k;
    need(k < lines.size() && lines[k].second.size() == 2 && lines[k].second[0] == "digraph-hash", "expected digraph-hash");
    pc.hash = lines[k].second[1];
    ++k;
    need(k < lines.size() && lines[k].second.size() == 2 && lines[k].second[0] == "verdict", "expected verdict");
    std::string verdict = lines[k].second[1];
    need(verdict == "YES" || verdict == "NO", "verdict must be YES or NO");
    ++k;
    bool ended = false;
    if (verdict == "YES") {
        pc.cert.verdict = Verdict::Yes;
        std::vector<std::pair<int, std::vector<std::string>>> records;
        for (; k < lines.size(); ++k) {
            const auto& t = lines[k].second;
            if (t[0] == "end") { ended = true; break; }
            if (t[0] == "width") continue;
            records.push_back(lines[k]);
        }
        pc.cert.decomposition = detail::read_dtd_records(records, names);
    } else {
        pc.cert.verdict = Verdict::No;
        MinorWitness w;
        Haven h;
        bool have_haven = false, have_pattern = false;
        for (; k < lines.size(); ++k) {
            const auto& [line, t] = lines[k];
            if (t[0] == "end") { ended = true; break; }
            if (t[0] == "pattern") {
                if (t.size() == 2 && t[1] == "A4") { w.kind = PatternKind::A4; w.length = 4; }
                else if (t.size() == 3 && t[1] == "bicycle") { w.kind = PatternKind::Bicycle; w.length = detail::parse_int(t[2], line); }
                else throw ParseError(line, "bad pattern line");
                have_pattern = true;
            } else if (t[0] == "del" && t.size() == 3) {
                w.script.push_back({StepKind::DeleteEdge, names.id(t[1], line), names.id(t[2], line)});
            } else if (t[0] == "delv" && t.size() == 2) {
                w.script.push_back({StepKind::DeleteVertex, names.id(t[1], line), -1});
            } else if (t[0] == "contract" && t.size() == 3) {
                w.script.push_back({StepKind::Contract, names.id(t[1], line), names.id(t[2], line)});
            } else if (t[0] == "image") {
                for (std::size_t i = 1; i < t.size(); ++i) w.image.push_back(names.id(t[i], line));
            } else if (t[0] == "branchset") {
                if (t.size() != 3) throw ParseError(line, "bad branchset line");
                pc.branch_sets.push_back(names.set(t[2], line));
            } else if (t[0] == "note") {
                std::string n;
                for (std::size_t i = 1; i < t.size(); ++i) n += (i > 1 ? " " : "") + t[i];
                w.notes.push_back(n);
            } else if (t[0] == "haven") {
                if (t.size() != 2) throw ParseError(line, "bad haven line");
                h.order = detail::parse_int(t[1], line);
                have_haven = true;
            } else if (t[0] == "h") {
                if (t.size() != 3) throw ParseError(line, "bad haven entry");
                h.assignment[names.set(t[1], line).bits()] = names.set(t[2], line);
            } else {
                throw ParseError(line, "unexpected record '" + t[0] + "'");
            }
        }
        if (!have_pattern) throw ParseError(0, "NO certificate without pattern");
        pc.cert.witness = w;
        if (have_haven) pc.cert.haven = h;
    }
    if (!ended) throw ParseError(lines.empty() ? 0 : lines.back().first, "missing 'end'");
    return pc;
}

}  // namespace dtw1
