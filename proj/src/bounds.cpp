#include "dpcolor/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace dpcolor {

namespace {

void require_k(BoundSource src, int k) {
  int min_k = 4;
  if (src == BoundSource::ks) min_k = 6;
  if (src == BoundSource::dp) min_k = 5;
  if (k < min_k) {
    std::ostringstream msg;
    msg << "bounds: this source requires k >= " << min_k << " (got " << k << ")";
    throw std::domain_error(msg.str());
  }
}

void require_n(BoundSource src, long long n, int k) {
  if (src == BoundSource::ky) {
    if (n < k || n == k + 1)
      throw std::domain_error("bounds: ky requires n >= k and n != k+1");
    return;
  }
  if (n < k + 2) throw std::domain_error("bounds: requires n >= k+2");
}

}  // namespace

Rat avg_degree_coefficient(BoundSource src, int k) {
  require_k(src, k);
  const long long K = k;
  switch (src) {
    case BoundSource::dirac:
      return Rat(K - 1);
    case BoundSource::gallai:
      return Rat(K - 1) + Rat(K - 3, K * K - 3);
    case BoundSource::krivelevich:
      return Rat(K - 1) + Rat(K - 3, K * K - 2 * K - 1);
    case BoundSource::ks:
      // 2(k-3) / (k^2+6k-9 - 6/(k-2)), cleared to integers
      return Rat(K - 1) + Rat(2 * (K - 3) * (K - 2), (K * K + 6 * K - 9) * (K - 2) - 6);
    case BoundSource::ky:
      return Rat(K - 1) + Rat(K - 3, K - 1);
    case BoundSource::rabern:
      if (k >= 7)
        return Rat(K - 1) +
               Rat((K - 3) * (K - 3) * (2 * K - 3),
                   K * K * K * K - 2 * K * K * K - 11 * K * K + 28 * K - 14);
      if (k == 6) return Rat(5) + Rat(93, 766);
      return Rat(K - 1) + Rat(K - 3, K * K - 2 * K + 2);  // k in {4, 5}
    case BoundSource::dp:
      return Rat(K - 1) + Rat(1, potential_params(k).lambda);
  }
  throw std::logic_error("bounds: unknown source");
}

Rat min_edges(BoundSource src, long long n, int k) {
  require_k(src, k);
  require_n(src, n, k);
  const Rat half_n(n, 2);
  switch (src) {
    case BoundSource::dirac:
      return avg_degree_coefficient(src, k) * half_n + Rat(k - 3, 2);
    case BoundSource::ky:
      return avg_degree_coefficient(src, k) * half_n - Rat((long long)k * (k - 3), 2LL * (k - 1));
    case BoundSource::dp:
      return avg_degree_coefficient(src, k) * half_n + Rat(1, potential_params(k).lambda);
    default:
      return avg_degree_coefficient(src, k) * half_n;
  }
}

std::vector<Table1Row> table1(const std::vector<int>& ks) {
  std::vector<Table1Row> rows;
  for (int k : ks)
    rows.push_back({k, avg_degree_coefficient(BoundSource::gallai, k),
                    avg_degree_coefficient(BoundSource::ky, k),
                    avg_degree_coefficient(BoundSource::rabern, k),
                    avg_degree_coefficient(BoundSource::dp, k)});
  return rows;
}

std::string render_table1(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "k\tGa\tKY\tRa\tDP\n";
  for (const auto& r : rows)
    out << r.k << '\t' << to_decimal_trunc(r.ga, 4) << '\t' << to_decimal_trunc(r.ky, 4) << '\t'
        << to_decimal_trunc(r.ra, 4) << '\t' << to_decimal_trunc(r.dp, 4) << '\n';
  return out.str();
}

AuditReport audit_graph(const Multigraph& g, int k) {
  const PotentialParams pp = potential_params(k);
  AuditReport r;
  r.k = k;
  r.lambda = pp.lambda;
  r.n = g.n();
  r.edge_count = g.edge_count();
  r.simple = g.is_simple();

  std::vector<int> h(g.n(), k - 1);
  r.rho = rho_graph(g, h, pp);
  r.rho_at_most_minus2 = r.rho <= -2;

  if (r.simple && g.n() == k && g.pair_count() == (long long)k * (k - 1) / 2) {
    r.classification = AuditReport::exceptional_complete_kk;
  } else if (k == 5 && g.n() == 2 && g.multiplicity(0, 1) == 4) {
    r.classification = AuditReport::exceptional_k2_4;
  } else if (k == 5 && is_exceptional(g, k) && !r.simple) {
    r.classification = AuditReport::exceptional_double_cycle;
  } else {
    if (g.n() >= k + 2) {
      r.threshold = min_edges(BoundSource::dp, g.n(), k);
      r.threshold_defined = true;
      bool meets = Rat(r.edge_count) >= r.threshold;
      r.classification = meets ? AuditReport::meets_edge_bound : AuditReport::below_edge_bound;
      if (r.simple) {
        r.equivalence_checked = true;
        r.equivalence_holds = (r.rho_at_most_minus2 == meets);
      }
    } else {
      r.classification = AuditReport::below_edge_bound;
    }
  }
  return r;
}

}  // namespace dpcolor
