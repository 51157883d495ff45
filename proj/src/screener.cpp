#include "nichols/screener.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace nichols {

std::string Verdict::tag_str() const {
  switch (tag) {
    case Tag::InfiniteDim: return "InfiniteDim";
    case Tag::FiniteDim: return "FiniteDim";
    case Tag::Undetermined: return "Undetermined";
  }
  return "?";
}

ClassProfile make_class_profile(const FiniteGroup& G, const GroupElement& s) {
  ClassProfile p;
  p.cls = conjugacy_class(G, s);
  p.cent = centralizer(G, s);
  p.reality = reality_report(G, s);
  p.witnesses = power_witnesses(G, p.cls);
  p.base_order = G.element_order(s);
  return p;
}

namespace {

std::string render_subrack(const ClassProfile& p, const std::vector<int>& indices) {
  std::string out = "{";
  for (size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ", ";
    out += p.cls.group.render(p.cls.elems[indices[k]]);
  }
  return out + "}";
}

// Walk every maximal abelian subrack once: fire the Cartan rule on the first
// non-finite matrix, and accumulate the operational negativity flag.
struct SubrackScan {
  bool ran = false;
  bool fired = false;
  bool negative = true;
  QMatrix fired_q;
  CartanMatrix fired_a;
  std::string note;
};

SubrackScan scan_subracks(const ClassProfile& p, const YDModule& m, const ScreenOptions& opts) {
  SubrackScan out;
  if (p.cls.size() > opts.subrack_bound) {
    out.note = "subrack-search-skipped: class size " + std::to_string(p.cls.size()) +
               " exceeds bound " + std::to_string(opts.subrack_bound);
    out.negative = false;
    return out;
  }
  out.ran = true;
  auto subracks = abelian_subracks(p.cls, /*max_only=*/true, opts.subrack_bound);
  for (const auto& s : subracks) {
    auto qs = diagonal_subspaces(m, s);
    if (qs.empty()) out.negative = false;  // nothing extractable to certify
    for (const auto& Q : qs) {
      for (int i = 0; i < Q.theta && out.negative; ++i)
        if (!Q.at(i, i).is_minus_one()) out.negative = false;
      for (int i = 0; i < Q.theta && out.negative; ++i)
        for (int j = i + 1; j < Q.theta; ++j)
          if (!Q.at(i, j).times(Q.at(j, i)).is_one()) {
            out.negative = false;
            break;
          }
      if (out.fired) continue;
      CartanResult c = cartan_from_q(Q);
      if (c.kind == CartanResult::Kind::InfiniteImmediately) {
        out.fired = true;
        out.fired_q = Q;
        continue;
      }
      if (c.kind == CartanResult::Kind::NotCartanType) continue;
      auto ft = is_finite_type(*c.matrix);
      if (!ft.finite) {
        out.fired = true;
        out.fired_q = Q;
        out.fired_a = *c.matrix;
      }
    }
  }
  return out;
}

bool class_is_abelian(const ClassProfile& p) {
  const FiniteGroup& G = p.cls.group;
  for (const auto& t : p.cls.elems)
    if (!G.commute(t, p.cls.base())) return false;
  for (size_t i = 0; i < p.cls.elems.size(); ++i)
    for (size_t j = i + 1; j < p.cls.elems.size(); ++j)
      if (!G.commute(p.cls.elems[i], p.cls.elems[j])) return false;
  return true;
}

}  // namespace

Verdict screen(const ClassProfile& p, const Irrep& rho, const ScreenOptions& opts) {
  Verdict v;
  RootOfUnity q = schur_scalar(rho, p.cls.base());
  v.q_ss = q;
  int ord = p.base_order;
  bool odd = ord % 2 == 1;
  bool q_not_minus_one = !q.is_minus_one();

  auto finish_flag = [&](const YDModule* m) {
    // operational negativity for the record, plus optional corroboration
    if (p.cls.size() <= opts.subrack_bound) {
      YDModule local;
      if (!m) {
        local = build_yd_module(p.cls, rho);
        m = &local;
      }
      SubrackScan s = scan_subracks(p, *m, opts);
      v.negative_braiding = s.negative;
      if (s.fired && v.tag == Verdict::Tag::InfiniteDim &&
          v.reasons.front().rfind("subrack-cartan", 0) != 0) {
        v.reasons.push_back("subrack-cartan (corroborating): subrack " +
                            render_subrack(p, s.fired_q.subrack) +
                            " also yields a non-finite Cartan matrix");
      }
      if (!s.note.empty()) v.reasons.push_back(s.note);
    } else {
      v.negative_braiding = false;
      v.reasons.push_back("subrack-search-skipped: class size " + std::to_string(p.cls.size()) +
                          " exceeds bound " + std::to_string(opts.subrack_bound));
    }
  };

  // scalar one on the base point
  if (q.is_one()) {
    v.tag = Verdict::Tag::InfiniteDim;
    v.reasons.push_back("unit-self-braiding: the base point acts by 1");
    finish_flag(nullptr);
    return v;
  }

  // real class
  if (p.reality.is_real && (q_not_minus_one || odd)) {
    v.tag = Verdict::Tag::InfiniteDim;
    v.reasons.push_back(std::string("real-class: base point conjugate to its inverse, ") +
                        (q_not_minus_one ? "q_ss != -1" : "odd order"));
    v.reality_witness = p.reality.inverting_witness;
    finish_flag(nullptr);
    return v;
  }

  // power rule, three distinct powers
  for (const auto& w : p.witnesses) {
    if (!w.distinct3) continue;
    if (q_not_minus_one || odd) {
      v.tag = Verdict::Tag::InfiniteDim;
      v.reasons.push_back("power-triple: s, s^j, s^(j^2) distinct in the class (j = " +
                          std::to_string(w.j) + "), " +
                          (q_not_minus_one ? "q_ss != -1" : "odd order"));
      v.power_witness = w;
      finish_flag(nullptr);
      return v;
    }
    break;
  }

  // power rule, square returning
  for (const auto& w : p.witnesses) {
    if (!w.square_returns) continue;
    if (rho.degree() > 1 && (q_not_minus_one || odd)) {
      v.tag = Verdict::Tag::InfiniteDim;
      v.reasons.push_back("power-return: s^j in the class with s^(j^2) = s (j = " +
                          std::to_string(w.j) + "), degree > 1 and " +
                          (q_not_minus_one ? "q_ss != -1" : "odd order"));
      v.power_witness = w;
      finish_flag(nullptr);
      return v;
    }
    if (rho.degree() == 1 && !q.is_minus_one() && q.order() != 3) {
      v.tag = Verdict::Tag::InfiniteDim;
      v.reasons.push_back("power-return: s^j in the class with s^(j^2) = s (j = " +
                          std::to_string(w.j) +
                          "), scalar outside {-1} and the primitive cube roots");
      v.power_witness = w;
      finish_flag(nullptr);
      return v;
    }
    break;
  }

  // abelian subracks against the finite-type list
  YDModule m = build_yd_module(p.cls, rho);
  std::optional<SubrackScan> sscan;
  if (p.cls.size() <= opts.subrack_bound) {
    sscan = scan_subracks(p, m, opts);
    v.negative_braiding = sscan->negative;
    if (sscan->fired) {
      v.tag = Verdict::Tag::InfiniteDim;
      v.reasons.push_back("subrack-cartan: abelian subrack " +
                          render_subrack(p, sscan->fired_q.subrack) +
                          " yields a Cartan matrix not of finite type");
      v.witness_q = sscan->fired_q;
      for (int idx : sscan->fired_q.subrack)
        v.witness_subrack_elems.push_back(p.cls.group.render(p.cls.elems[idx]));
      if (sscan->fired_a.theta > 0) v.witness_cartan = sscan->fired_a;
      return v;
    }
  }

  // finite patterns need the whole module to be diagonal
  bool abelian_class = class_is_abelian(p);
  if (abelian_class) {
    bool flip = true;
    CycloMatrix minus_id = CycloMatrix::identity(rho.modulus(), rho.degree());
    for (auto& c : minus_id.a) c = -c;
    for (int i = 0; i < m.class_size() && flip; ++i)
      for (int j = 0; j < m.class_size(); ++j)
        if (!(rho.at(m.gamma(i, j)) == minus_id)) {
          flip = false;
          break;
        }
    if (flip) {
      v.tag = Verdict::Tag::FiniteDim;
      v.dimension = 1LL << m.degree();
      v.reasons.push_back(
          "flip-braiding: c is the negated flip on the whole module, the Nichols algebra is "
          "the exterior algebra");
      QMatrix full;
      full.theta = m.degree();
      full.q.assign(static_cast<size_t>(full.theta) * full.theta, RootOfUnity::minus_one());
      for (int i = 0; i < m.class_size(); ++i) full.subrack.push_back(i);
      v.witness_q = full;
      if (!sscan) v.negative_braiding = true;
      return v;
    }
    if (m.class_size() == 2 && rho.degree() == 1) {
      Subrack whole;
      whole.indices = {0, 1};
      whole.abelian = whole.maximal = true;
      auto qs = diagonal_subspaces(m, whole);
      if (qs.size() == 1) {
        const QMatrix& Q = qs[0];
        if (Q.at(0, 0).is_minus_one() && Q.at(1, 1).is_minus_one() &&
            Q.at(0, 1).times(Q.at(1, 0)).is_one()) {
          v.tag = Verdict::Tag::FiniteDim;
          v.dimension = 4;
          v.reasons.push_back(
              "disconnected-pair: two-point diagonal braiding with q_ii = -1 and "
              "q_12 q_21 = 1");
          v.witness_q = Q;
          for (int idx : Q.subrack)
            v.witness_subrack_elems.push_back(p.cls.group.render(p.cls.elems[idx]));
          return v;
        }
      }
    }
  }

  v.tag = Verdict::Tag::Undetermined;
  v.reasons.push_back(
      "undetermined: exhausted rules [unit-self-braiding, real-class, power-triple, "
      "power-return, subrack-cartan, flip-braiding, disconnected-pair]");
  if (!sscan) {
    v.negative_braiding = false;
    v.reasons.push_back("subrack-search-skipped: class size " + std::to_string(p.cls.size()) +
                        " exceeds bound " + std::to_string(opts.subrack_bound));
  }
  return v;
}

Verdict screen(const FiniteGroup& G, const ConjugacyClass& O, const Irrep& rho,
               const ScreenOptions& opts) {
  ClassProfile p;
  p.cls = O;
  p.cent = centralizer(G, O.base());
  p.reality = reality_report(G, O.base());
  p.witnesses = power_witnesses(G, O);
  p.base_order = G.element_order(O.base());
  return screen(p, rho, opts);
}

// ------------------------------------------------------------- scans

namespace {

void run_indexed(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(jobs, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

Verdict identity_class_verdict() {
  Verdict v;
  v.tag = Verdict::Tag::InfiniteDim;
  v.q_ss = RootOfUnity::one();
  v.reasons.push_back(
      "unit-self-braiding: the base point acts by 1 (for every representation)");
  return v;
}

enum class ScanMode {
  Table,  // one row per (class, irrep) pair; only the identity collapses
  Scan,   // collapse representation-free classes, family rows when unsupported
};

std::vector<ScreenRow> screen_rows(const FiniteGroup& G, const ScreenOptions& opts,
                                   ScanMode mode) {
  auto classes = all_conjugacy_classes(G);
  std::vector<ScreenRow> rows;
  std::vector<std::pair<ClassProfile, Irrep>> jobs;
  std::vector<size_t> job_row;  // row slot for each job

  for (auto& cls : classes) {
    ScreenRow base_row;
    base_row.group = G;
    base_row.class_rep = G.render(cls.base());
    base_row.class_size = cls.size();

    if (G.is_identity(cls.base())) {
      base_row.centralizer = G.kind() == GroupKind::Dn ? "D" + std::to_string(G.param())
                                                       : G.name();
      base_row.rep = "any";
      base_row.verdict = identity_class_verdict();
      rows.push_back(std::move(base_row));
      continue;
    }

    ClassProfile p = make_class_profile(G, cls.base());
    base_row.centralizer = p.cent.label;
    int ord = p.base_order;
    bool odd = ord % 2 == 1;

    bool has_distinct3 = false;
    const PowerWitness* d3 = nullptr;
    for (const auto& w : p.witnesses)
      if (w.distinct3) {
        has_distinct3 = true;
        d3 = &w;
        break;
      }

    if (mode == ScanMode::Scan && odd && (p.reality.is_real || has_distinct3)) {
      base_row.rep = "any";
      Verdict v;
      v.tag = Verdict::Tag::InfiniteDim;
      if (p.reality.is_real) {
        v.reasons.push_back(
            "real-class: base point conjugate to its inverse, odd order (for every "
            "representation)");
        v.reality_witness = p.reality.inverting_witness;
      } else {
        v.reasons.push_back("power-triple: s, s^j, s^(j^2) distinct in the class (j = " +
                            std::to_string(d3->j) + "), odd order (for every representation)");
        v.power_witness = *d3;
      }
      base_row.verdict = std::move(v);
      rows.push_back(std::move(base_row));
      continue;
    }

    if (centralizer_irreps_available(p.cent)) {
      auto irreps = centralizer_irreps(p.cent);
      for (auto& rho : irreps) {
        ScreenRow r = base_row;
        r.rep = rho.label();
        size_t slot = rows.size();
        rows.push_back(std::move(r));
        jobs.emplace_back(p, std::move(rho));
        job_row.push_back(slot);
      }
      continue;
    }

    if (mode == ScanMode::Table)
      throw spec_error("centralizer representations unavailable for class " +
                       base_row.class_rep + " (structure " + p.cent.label + ")");

    // family rows per possible q_ss
    {
      ScreenRow r = base_row;
      r.rep = "q_ss!=-1";
      Verdict v;
      if (p.reality.is_real) {
        v.tag = Verdict::Tag::InfiniteDim;
        v.reasons.push_back(
            "real-class: base point conjugate to its inverse, q_ss != -1 (for every "
            "representation with q_ss != -1)");
        v.reality_witness = p.reality.inverting_witness;
      } else if (has_distinct3) {
        v.tag = Verdict::Tag::InfiniteDim;
        v.reasons.push_back("power-triple: s, s^j, s^(j^2) distinct in the class (j = " +
                            std::to_string(d3->j) + "), q_ss != -1 (for every representation "
                            "with q_ss != -1)");
        v.power_witness = *d3;
      } else {
        v.tag = Verdict::Tag::Undetermined;
        v.reasons.push_back("undetermined: no representation-free rule applies and "
                            "centralizer-reps-unavailable: structure " + p.cent.label);
      }
      r.verdict = std::move(v);
      rows.push_back(std::move(r));
    }
    {
      ScreenRow r = base_row;
      r.rep = "q_ss=-1";
      Verdict v;
      v.tag = Verdict::Tag::Undetermined;
      v.q_ss = RootOfUnity::minus_one();
      v.reasons.push_back("centralizer-reps-unavailable: structure " + p.cent.label);
      r.verdict = std::move(v);
      rows.push_back(std::move(r));
    }
  }

  run_indexed(opts.jobs, static_cast<int>(jobs.size()), [&](int i) {
    rows[job_row[static_cast<size_t>(i)]].verdict =
        screen(jobs[static_cast<size_t>(i)].first, jobs[static_cast<size_t>(i)].second, opts);
  });
  return rows;
}

}  // namespace

std::vector<ScreenRow> table_dn(int n, const ScreenOptions& opts) {
  if (n < 3) throw spec_error("table_dn requires n >= 3");
  FiniteGroup G = FiniteGroup::dihedral(n);
  return screen_rows(G, opts, ScanMode::Table);
}

std::vector<ScreenRow> scan_an(int n, const ScreenOptions& opts) {
  if (n < 4 || n > 8) throw spec_error("scan_an supports 4 <= n <= 8");
  FiniteGroup G = FiniteGroup::alternating(n);
  return screen_rows(G, opts, ScanMode::Scan);
}

}  // namespace nichols
