#include "modspace/oracle.hpp"

#include <utility>

#include "modspace/errors.hpp"

namespace modspace {

namespace {

// Shared tail of every characterization: the index hypotheses either hold or
// not, then s is compared against the clause threshold.
Verdict settle(bool indices_ok, std::string prefix, std::string clause_tag, Rational critical, bool strict,
               bool source_side, const Rational& s, std::string violated, std::string condition,
               std::optional<IndexPiece> piece) {
  Verdict v;
  v.critical_s = std::move(critical);
  v.strict = strict;
  v.piece = piece;
  if (!indices_ok) {
    v.holds = false;
    v.clause = prefix + " none";
    v.explanation = "index hypothesis violated: " + violated;
    return v;
  }
  v.clause = prefix + " " + clause_tag;
  if (source_side) {
    v.holds = strict ? s > v.critical_s : s >= v.critical_s;
  } else {
    v.holds = strict ? s < v.critical_s : s <= v.critical_s;
  }
  v.explanation = (v.holds ? "satisfied: " : "smoothness fails: ") + condition;
  return v;
}

void require_sobolev_range(const Exponent& r, const Exponent& p, const char* what) {
  if (r < Exponent(1)) {
    throw DomainError(std::string(what) + " requires 1 <= r <= inf, got r=" + r.str());
  }
  if (p < Exponent(1)) {
    throw DomainError(std::string(what) + " requires 1 <= p <= inf, got p=" + p.str());
  }
}

}  // namespace

Verdict embed_besov_to_mod(const Exponent& p0, const Exponent& q0, const Exponent& p, const Exponent& q,
                           const Rational& s, int d) {
  const bool first = q0 <= q;
  return settle(p0 <= p, "B->M", first ? "(1)" : "(2)", tau(p0, q, d), !first, true, s, "p0 <= p",
                first ? "p0 <= p, q0 <= q, s >= tau(p0,q)" : "p0 <= p, q0 > q, s > tau(p0,q)",
                tau_region(p0, q));
}

Verdict embed_mod_to_besov(const Exponent& p, const Exponent& q, const Exponent& p1, const Exponent& q1,
                           const Rational& s, int d) {
  const bool first = q1 >= q;
  return settle(p1 >= p, "M->B", first ? "(1)" : "(2)", sigma(p1, q, d), !first, false, s, "p1 >= p",
                first ? "p1 >= p, q1 >= q, s <= sigma(p1,q)" : "p1 >= p, q1 < q, s < sigma(p1,q)",
                sigma_region(p1, q));
}

Verdict embed_hs_to_mod(const Exponent& p, const Exponent& q, const Rational& s, int d) {
  Verdict v = embed_besov_to_mod(Exponent(2), Exponent(2), p, q, s, d);
  v.clause.replace(0, 4, "H->M");
  return v;
}

Verdict embed_mod_to_hs(const Exponent& p, const Exponent& q, const Rational& s, int d) {
  Verdict v = embed_mod_to_besov(p, q, Exponent(2), Exponent(2), s, d);
  v.clause.replace(0, 4, "M->H");
  return v;
}

Verdict embed_sobolev_to_mod(const Exponent& r, const Exponent& p, const Exponent& q, const Rational& s, int d) {
  require_sobolev_range(r, p, "W->M");
  const Exponent one(1);
  std::string tag;
  bool strict = false;
  std::string condition;
  if (r == one && q.is_infinite()) {
    tag = "(3)";
    condition = "r = 1, q = inf, s >= tau(r,q)";
  } else if (r == one) {
    tag = "(4)";
    strict = true;
    condition = "r = 1, q < inf, s > tau(r,q)";
  } else if (r > q) {
    tag = "(1)";
    strict = true;
    condition = "r > q, s > tau(r,q)";
  } else {
    tag = "(2)";
    condition = "1 < r <= q, s >= tau(r,q)";
  }
  return settle(r <= p, "W->M", tag, tau(r, q, d), strict, true, s, "r <= p", condition, tau_region(r, q));
}

Verdict embed_mod_to_sobolev(const Exponent& p, const Exponent& q, const Exponent& r, const Rational& s, int d) {
  require_sobolev_range(r, p, "M->W");
  const Exponent one(1);
  const bool below_one = q < one;
  std::string tag;
  bool strict = false;
  std::string condition;
  if (r.is_infinite() && q <= one) {
    tag = below_one ? "(3) q<1 extension" : "(3)";
    condition = "r = inf, q <= 1, s <= sigma(r,q)";
  } else if (r.is_infinite()) {
    tag = "(4)";
    strict = true;
    condition = "r = inf, 1 < q, s < sigma(r,q)";
  } else if (r < q) {
    tag = "(1)";
    strict = true;
    condition = "r < q, s < sigma(r,q)";
  } else {
    tag = below_one ? "(2) q<1 extension" : "(2)";
    condition = "q <= r < inf, s <= sigma(r,q)";
  }
  return settle(p <= r, "M->W", tag, sigma(r, q, d), strict, false, s, "p <= r", condition, sigma_region(r, q));
}

Verdict embed_triebel2_to_mod(const Exponent& p, const Exponent& q, const Rational& s, int d) {
  const bool first = q >= p;
  return settle(true, "F2->M", first ? "(1)" : "(2)", tau(p, q, d), !first, true, s, "",
                first ? "q >= p, s >= tau(p,q)" : "q < p, s > tau(p,q)", tau_region(p, q));
}

Verdict embed_mod_to_triebel2(const Exponent& p, const Exponent& q, const Rational& s, int d) {
  const bool first = q <= p;
  return settle(true, "M->F2", first ? "(1)" : "(2)", sigma(p, q, d), !first, false, s, "",
                first ? "q <= p, s <= sigma(p,q)" : "q > p, s < sigma(p,q)", sigma_region(p, q));
}

Verdict embed_triebel_to_mod(const Exponent& p0, const Exponent& p, const Exponent& q, const Rational& s, int d) {
  const bool first = p0 <= q;
  return settle(p0 <= p, "F->M", first ? "(1)" : "(2)", tau(p0, q, d), !first, true, s, "p0 <= p",
                first ? "p0 <= q, s >= tau(p0,q)" : "p0 > q, s > tau(p0,q)", tau_region(p0, q));
}

Verdict embed_mod_to_triebel(const Exponent& p, const Exponent& p1, const Exponent& q, const Rational& s, int d) {
  const bool first = p1 >= q;
  return settle(p1 >= p, "M->F", first ? "(1)" : "(2)", sigma(p1, q, d), !first, false, s, "p1 >= p",
                first ? "p1 >= q, s <= sigma(p1,q)" : "p1 < q, s < sigma(p1,q)", sigma_region(p1, q));
}

Verdict embed_mod_to_fourierlp(const Exponent& p, const Exponent& q, const Exponent& r, const Rational& s, int d) {
  require_dimension(d);
  const bool first = q <= r;
  const bool indices = p <= Exponent(2) && r <= p.dual();
  const Rational gap = r.reciprocal() - q.reciprocal();
  Rational critical = first ? Rational(0) : Rational(d * gap);
  return settle(indices, "M->FL", first ? "(1)" : "(2)", std::move(critical), !first, true, s, "p <= 2, r <= p'",
                first ? "p <= 2, q <= r <= p', s >= 0" : "p <= 2, r <= p', r < q, s > d(1/r-1/q)", std::nullopt);
}

Verdict embed_fourierlp_to_mod(const Exponent& r, const Exponent& p, const Exponent& q, const Rational& s, int d) {
  require_dimension(d);
  const bool first = r <= q;
  const bool indices = p >= Exponent(2) && p.dual() <= r;
  const Rational gap = r.reciprocal() - q.reciprocal();
  Rational critical = first ? Rational(0) : Rational(d * gap);
  return settle(indices, "FL->M", first ? "(1)" : "(2)", std::move(critical), !first, false, s, "p >= 2, p' <= r",
                first ? "p >= 2, p' <= r <= q, s <= 0" : "p >= 2, p' <= r, r > q, s < d(1/r-1/q)", std::nullopt);
}

namespace {

void require_same_dimension(const SpaceSpec& from, const SpaceSpec& to) {
  if (from.d != to.d) throw std::invalid_argument("source and target dimensions differ");
}

}  // namespace

Verdict decide(const SpaceSpec& from, const SpaceSpec& to) {
  from.validate();
  to.validate();
  require_same_dimension(from, to);
  const int d = from.d;

  if (to.family == Family::Modulation) {
    // Only the smoothness difference matters; every characterization is stated for M^0 targets.
    const Rational s = from.s - to.s;
    const Exponent& p = to.need_p();
    const Exponent& q = to.need_q();
    switch (from.family) {
      case Family::Besov: return embed_besov_to_mod(from.need_p(), from.need_q(), p, q, s, d);
      case Family::SobolevW: return embed_sobolev_to_mod(from.need_r(), p, q, s, d);
      case Family::Triebel: {
        const Exponent& p0 = from.need_p();
        const Exponent& q0 = from.need_q();
        if (q0 == q) return embed_triebel_to_mod(p0, p, q, s, d);
        if (q0 == Exponent(2) && p0 == p) return embed_triebel2_to_mod(p, q, s, d);
        throw UncharacterizedError("F[p0,q0] -> M[p,q] with q0 != q: the general F_{p0,q0} case is open");
      }
      case Family::FourierL:
        // FL carries no smoothness, so the target weight is the s being tested.
        return embed_fourierlp_to_mod(from.need_r(), p, q, to.s, d);
      case Family::Modulation: break;
    }
  }

  if (from.family == Family::Modulation) {
    const Rational s = to.s - from.s;
    const Exponent& p = from.need_p();
    const Exponent& q = from.need_q();
    switch (to.family) {
      case Family::Besov: return embed_mod_to_besov(p, q, to.need_p(), to.need_q(), s, d);
      case Family::SobolevW: return embed_mod_to_sobolev(p, q, to.need_r(), s, d);
      case Family::Triebel: {
        const Exponent& p1 = to.need_p();
        const Exponent& q1 = to.need_q();
        if (q1 == q) return embed_mod_to_triebel(p, p1, q, s, d);
        if (q1 == Exponent(2) && p1 == p) return embed_mod_to_triebel2(p, q, s, d);
        throw UncharacterizedError("M[p,q] -> F[p1,q1] with q1 != q: the general F_{p1,q1} case is open");
      }
      case Family::FourierL:
        // M^s_{p,q} -> FL^r: the source smoothness enters with its own sign.
        return embed_mod_to_fourierlp(p, q, to.need_r(), from.s, d);
      case Family::Modulation: break;
    }
  }

  throw UncharacterizedError("no characterization for " + std::string(to_string(from.family)) + " -> " +
                             std::string(to_string(to.family)));
}

std::string_view to_string(RegionPair pair) {
  switch (pair) {
    case RegionPair::BesovToMod: return "B-M";
    case RegionPair::ModToBesov: return "M-B";
    case RegionPair::SobolevToMod: return "W-M";
    case RegionPair::ModToSobolev: return "M-W";
    case RegionPair::TriebelToMod: return "F-M";
    case RegionPair::ModToTriebel: return "M-F";
    case RegionPair::Triebel2ToMod: return "F2-M";
    case RegionPair::ModToTriebel2: return "M-F2";
    case RegionPair::ModToFourier: return "M-FL";
    case RegionPair::FourierToMod: return "FL-M";
  }
  return "?";
}

RegionPair parse_region_pair(std::string_view text) {
  for (auto pair : {RegionPair::BesovToMod, RegionPair::ModToBesov, RegionPair::SobolevToMod,
                    RegionPair::ModToSobolev, RegionPair::TriebelToMod, RegionPair::ModToTriebel,
                    RegionPair::Triebel2ToMod, RegionPair::ModToTriebel2, RegionPair::ModToFourier,
                    RegionPair::FourierToMod}) {
    if (to_string(pair) == text) return pair;
  }
  throw ParseError("unknown pair '" + std::string(text) + "'", 0);
}

namespace {

Exponent from_reciprocal(const Rational& x) {
  if (x < 0) throw std::domain_error("region coordinates must be >= 0");
  if (x == 0) return Exponent::infinity();
  return Exponent(Rational(1) / x);
}

}  // namespace

std::vector<RegionCell> classify_region(const RegionQuery& query,
                                        const std::vector<std::pair<Rational, Rational>>& points) {
  std::vector<RegionCell> out;
  out.reserve(points.size());
  const int d = query.d;
  for (const auto& [x, y] : points) {
    const Exponent a = from_reciprocal(x);
    const Exponent q = from_reciprocal(y);
    RegionCell cell{x, y, {}, {}};
    switch (query.pair) {
      case RegionPair::BesovToMod: cell.verdict = embed_besov_to_mod(a, q, a, q, query.s, d); break;
      case RegionPair::ModToBesov: cell.verdict = embed_mod_to_besov(a, q, a, q, query.s, d); break;
      case RegionPair::SobolevToMod: cell.verdict = embed_sobolev_to_mod(a, a, q, query.s, d); break;
      case RegionPair::ModToSobolev: cell.verdict = embed_mod_to_sobolev(a, q, a, query.s, d); break;
      case RegionPair::TriebelToMod: cell.verdict = embed_triebel_to_mod(a, a, q, query.s, d); break;
      case RegionPair::ModToTriebel: cell.verdict = embed_mod_to_triebel(a, a, q, query.s, d); break;
      case RegionPair::Triebel2ToMod: cell.verdict = embed_triebel2_to_mod(a, q, query.s, d); break;
      case RegionPair::ModToTriebel2: cell.verdict = embed_mod_to_triebel2(a, q, query.s, d); break;
      case RegionPair::ModToFourier:
        cell.verdict = embed_mod_to_fourierlp(query.fixed_p.value_or(Exponent(1)), q, a, query.s, d);
        break;
      case RegionPair::FourierToMod:
        cell.verdict = embed_fourierlp_to_mod(a, query.fixed_p.value_or(Exponent::infinity()), q, query.s, d);
        break;
    }
    if (cell.verdict.piece) {
      cell.piece = std::string(to_string(*cell.verdict.piece));
    } else {
      cell.piece = cell.verdict.critical_s == 0 ? "zero" : "r-q";
    }
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> region_grid(int resolution, const Rational& x_max, const Rational& y_max) {
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  std::vector<std::pair<Rational, Rational>> pts;
  if (resolution == 1) {
    pts.emplace_back(Rational(0), Rational(0));
    return pts;
  }
  pts.reserve(static_cast<std::size_t>(resolution) * resolution);
  const int steps = resolution - 1;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      pts.emplace_back(x_max * i / steps, y_max * j / steps);
    }
  }
  return pts;
}

std::pair<Rational, Rational> region_extent(RegionPair pair) {
  const bool sobolev = pair == RegionPair::SobolevToMod || pair == RegionPair::ModToSobolev;
  return {sobolev ? Rational(1) : Rational(3, 2), Rational(3, 2)};
}

}  // namespace modspace
