#include "edgering/family_certificates.hpp"

#include <string>

#include "edgering/errors.hpp"

namespace edgering {

namespace {

const Rat kHalf(1, 2);
const Rat kThird(1, 3);
const Rat kTwoThirds(2, 3);

void check_certificate(const FamilyCertificate& cert) {
    const SimpleGraph& g = cert.graph;
    Rat total = 0;
    std::vector<Rat> vertex_sum(g.n_vertices + 1, Rat(0));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Rat& w = cert.weights[i];
        if (w <= 0) {
            throw anomaly_error("AssertionFailure",
                                "certificate weight " + std::to_string(i + 1) +
                                    " is not positive");
        }
        total += w;
        vertex_sum[g.edges[i].first] += w;
        vertex_sum[g.edges[i].second] += w;
    }
    if (total != cert.dilation) {
        throw anomaly_error("AssertionFailure",
                            "certificate weights sum to " + total.get_str() +
                                ", expected " + std::to_string(cert.dilation));
    }
    for (int v = 1; v <= g.n_vertices; ++v) {
        if (vertex_sum[v] != cert.point[v - 1]) {
            throw anomaly_error(
                "AssertionFailure",
                "certificate misses the point at vertex " + std::to_string(v));
        }
    }
}

}  // namespace

FamilyCertificate family_certificate(const FamilySpec& spec) {
    FamilyCertificate cert;
    cert.spec = spec;
    cert.graph = build_family(spec);
    const int q = spec.q, k = spec.k, m = spec.m;
    const int n_edges = cert.graph.n_edges();

    switch (spec.kind) {
        case FamilyKind::DisjointPair:
            // All degrees are 2: weight 1/2 everywhere hits the all-ones
            // point, and 4q * 1/2 = 2q.
            cert.dilation = 2 * q;
            cert.point.assign(cert.graph.n_vertices, 1);
            cert.weights.assign(n_edges, kHalf);
            break;
        case FamilyKind::OneCommonVertex:
            // Same uniform weights; the shared vertex has degree 4, so the
            // point takes value 2 there.
            cert.dilation = 2 * q;
            cert.point.assign(cert.graph.n_vertices, 1);
            cert.point[0] = 2;
            cert.weights.assign(n_edges, kHalf);
            break;
        case FamilyKind::EvenEar: {
            // Three even paths join vertex 1 to vertex 2k+1. Alternating
            // 1/3, 2/3 outward from vertex 1 gives sums 3*(1/3) = 1 there
            // and 3*(2/3) = 2 at the far branch vertex.
            cert.dilation = q + m;
            cert.point.assign(cert.graph.n_vertices, 1);
            cert.point[2 * k] = 2;
            cert.weights.assign(n_edges, Rat(0));
            for (int j = 1; j <= 2 * k; ++j) {
                cert.weights[j - 1] = j % 2 ? kThird : kTwoThirds;
            }
            for (int j = 2 * k + 1; j <= 2 * q; ++j) {
                cert.weights[j - 1] = j % 2 ? kTwoThirds : kThird;
            }
            for (int j = 2 * q + 1; j <= 2 * q + 2 * m; ++j) {
                cert.weights[j - 1] = (j - 2 * q) % 2 ? kThird : kTwoThirds;
            }
            break;
        }
        case FamilyKind::OddEar: {
            // Three odd paths join vertex 1 to vertex 2k; both branch
            // vertices collect 3*(1/3) = 1, so the all-ones point works.
            cert.dilation = q + m - 1;
            cert.point.assign(cert.graph.n_vertices, 1);
            cert.weights.assign(n_edges, Rat(0));
            for (int j = 1; j <= 2 * k - 1; ++j) {
                cert.weights[j - 1] = j % 2 ? kThird : kTwoThirds;
            }
            for (int j = 2 * k; j <= 2 * q; ++j) {
                cert.weights[j - 1] = j % 2 ? kTwoThirds : kThird;
            }
            for (int j = 2 * q + 1; j <= 2 * q + 2 * m - 1; ++j) {
                cert.weights[j - 1] = (j - 2 * q) % 2 ? kThird : kTwoThirds;
            }
            break;
        }
    }

    check_certificate(cert);
    return cert;
}

}  // namespace edgering
