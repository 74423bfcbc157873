#pragma once

// Certified k-colorability for (gem, co-gem)-free graphs.  Every answer
// carries an artifact a verifier can check without trusting the solver:
//
//   yes          a proper k-coloring
//   no           vertices inducing a (k+1)-vertex-critical subgraph, which
//                in this class is K_{k+1} or a critical C5 clique expansion
//   out_of_class vertices inducing a gem or a co-gem
//
// verify_certificate re-derives each claim from the graph alone.

#include <optional>
#include <string>

#include "vcrit/coloring.hpp"
#include "vcrit/expansion.hpp"
#include "vcrit/graph.hpp"

namespace vcrit {

struct Certificate {
    enum class Verdict { yes, no, out_of_class };

    Verdict verdict = Verdict::yes;
    int k = 0;
    std::optional<Coloring> coloring;              // yes
    std::optional<VertexSet> witness;              // no / out_of_class
    std::optional<int> claimed_clique;             // no: witness induces K_m
    std::optional<ExpansionProfile> claimed_profile;  // no: witness induces this expansion
    std::string claimed_family;                    // out_of_class: "gem" or "co-gem"

    bool operator==(const Certificate&) const = default;
};

struct CertifyOptions {
    // certify needs the (k+1)-critical inventory; levels at or above this
    // ceiling are refused rather than silently extrapolated.
    int max_level = 16;
};

// Decide k-colorability of g with a checkable artifact.  Throws
// std::invalid_argument for k < 1 or k >= max_level, and std::logic_error
// if the internal case analysis ever fails to close (which would mean a bug,
// not a property of the input).
Certificate certify(const Graph& g, int k, const CertifyOptions& opt = {});

// Re-check a certificate from scratch.  False on any mismatch, malformed
// index, wrong verdict arithmetic or tampered artifact; never throws.
bool verify_certificate(const Graph& g, int k, const Certificate& cert);

// Vertices of g inducing a C5 clique expansion with bag sizes p (up to
// rotation/reflection), or nullopt.  Searches bags directly instead of
// through generic subgraph matching, so profile-sized patterns stay cheap.
std::optional<VertexSet> find_induced_expansion(const Graph& g, const ExpansionProfile& p);

// True when s induces in g a C5 clique expansion whose bag sizes match p up
// to rotation/reflection.  Works by partitioning the induced subgraph into
// closed-neighborhood (true twin) classes -- for a C5 expansion those are
// exactly the bags -- so no generic isomorphism test is involved and the
// witness size is not limited.
bool matches_expansion(const Graph& g, const VertexSet& s, const ExpansionProfile& p);

// Normative JSON shape:
//   {"verdict": "yes"|"no"|"out_of_class", "k": int,
//    "coloring": [int...]|null, "witness": [int...]|null,
//    "claimed": "K<m>"|"profile:k1,k2,k3,k4,k5"|"gem"|"co-gem"|null}
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);  // throws std::runtime_error

}  // namespace vcrit
