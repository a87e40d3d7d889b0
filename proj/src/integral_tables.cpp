#include "nielson/integral_tables.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <quadmath.h>

#include "nielson/error.hpp"
#include "nielson/quadrature.hpp"

namespace nielson {

namespace {

// Closed forms are evaluated in quad precision: the printed expressions cancel
// heavily for small beta and would otherwise lose most of their digits.
using Real = __float128;
using GroupValues = std::vector<std::optional<double>>;

GroupValues to_double(const std::vector<Real>& v) {
  GroupValues out;
  for (Real x : v) out.emplace_back(static_cast<double>(x));
  return out;
}

// The four independent entries phi_{0,1}, phi_{0,2}, phi_{1,1}, phi_{1,2}.
struct PhiCore {
  Real p01, p02, p11, p12;
};

PhiCore phi_trig(Real b, int r) {
  const Real cb = cosq(b), sb = sinq(b);
  const Real cb2 = cb * cb, cb3 = cb2 * cb;
  const Real s8 = ipow(sinq(0.5 * b), 8);
  const Real q = 1.0 - 4.0 * cb + 6.0 * cb2 - 4.0 * cb3 + cb2 * cb2;
  if (r == 1) {
    return {((24 + 4 * cb - 18 * cb2 + 5 * cb3) * sb - 3 * b * (6 + 2 * cb - 3 * cb2)) / (96 * s8),
            ((-12 + 24 * cb + 2 * cb2 + cb3) * sb + 3 * b * (2 - 2 * cb - 5 * cb2)) / (96 * s8),
            ((-32 - 12 * cb + 34 * cb2 - 5 * cb3) * sb + 3 * b * (8 + 4 * cb - 5 * cb2 - 2 * cb3)) / (6 * q),
            ((20 - 16 * cb - 18 * cb2 - cb3) * sb - 3 * b * (4 - 7 * cb2 - 2 * cb3)) / (6 * q)};
  }
  return {((12 + 5 * cb + 9 * cb2 - 14 * cb3) * sb - 3 * b * (6 + cb - 3 * cb2)) / (3 * q),
          ((-18 + 21 * cb + 7 * cb2 + 2 * cb3) * sb + 3 * b * (4 - cb - 7 * cb2)) / (3 * q),
          ((-16 - 24 * cb + 11 * cb2 + 17 * cb3) * sb + 3 * b * (10 - 7 * cb2 + 2 * cb - cb3)) / (3 * q),
          ((22 - 2 * cb - 27 * cb2 - 5 * cb3) * sb - 3 * b * (8 - 11 * cb2 - cb3)) / (3 * q)};
}

PhiCore phi_hyperbolic(Real b, int r) {
  const Real ch = coshq(b), ch2 = ch * ch, ch3 = ch2 * ch;
  const Real s1 = sinhq(b), s2 = sinhq(2 * b), s3 = sinhq(3 * b), s4 = sinhq(4 * b);
  const Real s8 = ipow(sinhq(0.5 * b), 8);
  const Real q = 1.0 - 4.0 * ch + 6.0 * ch2 - 4.0 * ch3 + ch2 * ch2;
  if (r == 1) {
    return {(48 * b * (6 + 2 * ch - 3 * ch2) - 312 * s1 - 52 * s2 + 72 * s3 - 10 * s4) / (1536 * s8),
            (-48 * b * (2 - 2 * ch - 5 * ch2) + 184 * s1 - 196 * s2 - 8 * s3 - 2 * s4) / (1536 * s8),
            (-48 * b * (8 + 4 * ch - 5 * ch2 - 2 * ch3) + 376 * s1 + 116 * s2 - 136 * s3 + 10 * s4) / (96 * q),
            (48 * b * (4 - 7 * ch2 - 2 * ch3) - 248 * s1 + 132 * s2 + 72 * s3 + 2 * s4) / (96 * q)};
  }
  return {(-24 * b * (6 + ch - 3 * ch2) + 114 * s1 - 8 * s2 + 18 * s3 - 14 * s4) / (24 * q),
          (24 * b * (4 - ch - 7 * ch2) - 130 * s1 + 88 * s2 + 14 * s3 + 2 * s4) / (24 * q),
          (48 * b * (10 + 2 * ch - 7 * ch2 - ch3) - 212 * s1 - 124 * s2 + 44 * s3 + 34 * s4) / (48 * q),
          (-48 * b * (8 - 11 * ch2 - ch3) + 244 * s1 - 36 * s2 - 108 * s3 - 10 * s4) / (48 * q)};
}

PhiCore phi_algtrig(Real b, int r) {
  const Real sb = sinq(b), cb = cosq(b), s2b = sinq(2 * b), c2b = cosq(2 * b);
  const Real e = 2 * sb - b - b * cb, f = b - sb;
  const Real b2 = b * b, b3 = b2 * b;
  const Real p02 = (-b - sb + b2 * sb + b * cb + cb * sb) * sb / (2 * e * f * f);
  if (r == 1) {
    return {(-3 * b + 6 * sb + 2 * b * cb - 3 * s2b + b * c2b) * sb / (4 * e * f * f), p02,
            (2 * b3 - 4 * sb - 4 * b2 * sb + 4 * b * cb + 2 * s2b - b2 * s2b - 4 * b * c2b) * sb * sb /
                (4 * e * e * f * f),
            (6 * b - 2 * sb - 3 * b2 * sb - 6 * b * cb + b3 * cb + s2b) * sb * sb / (2 * e * e * f * f)};
  }
  return {(-b - 2 * sb + 2 * b * cb + s2b - b * c2b) * sb / (4 * e * f * f), p02,
          (2 * b + 2 * b3 + 4 * sb - 4 * b2 * sb - 4 * b * cb - 2 * s2b + b2 * s2b + 2 * b * c2b) * sb * sb /
              (4 * e * e * f * f),
          (b + 2 * sb - b2 * sb - 2 * b * cb + b3 * cb - s2b + b * c2b) * sb * sb / (2 * e * e * f * f)};
}

struct DoublePhiCore {
  double p01, p02, p11, p12;
};

double phi_single(const UnivariateBasis& basis, int r, int k, int l, double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  return integrate_scalar(
      [&](double x) {
        const BasisJet j = basis.eval_all(x);
        return j(k, r) * j(l, r);
      },
      0.0, basis.beta(), opt);
}

Eigen::Matrix4d phi_from_core(const DoublePhiCore& c, double p00, double p03) {
  Eigen::Matrix4d m;
  m << p00, c.p01, c.p02, p03,
       c.p01, c.p11, c.p12, c.p02,
       c.p02, c.p12, c.p11, c.p01,
       p03, c.p02, c.p01, p00;
  return m;
}

void check_conditioning(const BasisFamily& family) {
  if (!is_polynomial(family.kind) && family.beta < 1e-3) {
    std::cerr << "warning: closed-form tables for " << short_name(family.kind) << " at beta = " << family.beta
              << " are poorly conditioned\n";
  }
}

// Entry groups shared by every closed tau table. Each group lists (z, flat) cells
// carrying one printed value; a disengaged optional marks a group the table omits.
struct Cell {
  int z;
  int r, s;
};

using Group = std::vector<Cell>;

const std::vector<Group>& groups_g1() {
  static const std::vector<Group> g = {
      {{0, 0, 0}, {1, 0, 0}, {0, 0, 3}, {1, 3, 0}},  // A
      {{1, 0, 1}, {0, 1, 0}, {0, 1, 2}, {1, 2, 1}},  // B
      {{0, 0, 1}, {0, 0, 2}, {1, 1, 0}, {1, 2, 0}},  // C
      {{1, 0, 2}, {1, 1, 2}, {0, 2, 0}, {0, 2, 1}},  // D
      {{0, 1, 1}, {1, 1, 1}},                        // 111
      {{0, 3, 0}, {1, 0, 3}},                        // vanishing corners
  };
  return g;
}

// Column index is z for the pairs (z, 2 - z): 0 -> (0,2), 1 -> (1,1), 2 -> (2,0).
const std::vector<Group>& groups_g2() {
  static const std::vector<Group> g = {
      {{0, 0, 0}, {2, 0, 0}, {0, 0, 3}, {2, 3, 0}},  // A
      {{1, 0, 0}},                                   // B
      {{0, 0, 1}, {0, 0, 2}, {2, 1, 0}, {2, 2, 0}},  // C
      {{1, 0, 1}, {1, 1, 0}},                        // D
      {{2, 0, 1}, {0, 1, 0}, {0, 1, 2}, {2, 2, 1}},  // E
      {{1, 0, 2}, {1, 2, 0}},                        // F
      {{2, 0, 2}, {2, 1, 2}, {0, 2, 0}, {0, 2, 1}},  // G
      {{0, 1, 1}, {2, 1, 1}},                        // 111 for (0,2), (2,0)
      {{1, 1, 2}, {1, 2, 1}},                        // H
      {{1, 0, 3}, {2, 0, 3}, {0, 3, 0}, {1, 3, 0}},  // vanishing corners
  };
  return g;
}

TauTable assemble_tau(const BasisFamily& family, int g, const GroupValues& values) {
  TauTable t;
  t.family = family;
  t.g = g;
  t.column.assign(g + 1, TauColumn::Zero());
  t.printed.assign(g + 1, Eigen::Matrix<bool, kTriCount, 1>::Constant(false));
  const auto& groups = g == 1 ? groups_g1() : groups_g2();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!values[i]) continue;
    for (const Cell& c : groups[i]) {
      t.column[c.z](tri_flat(c.r, c.s)) = *values[i];
      t.printed[c.z](tri_flat(c.r, c.s)) = true;
    }
  }
  if (g == 2 && values[7]) {
    // tau^{0,2}_{111} = 2 tau^{1,1}_{111} = tau^{2,0}_{111}.
    t.column[1](kTri111) = 0.5 * *values[7];
    t.printed[1](kTri111) = true;
  }
  return t;
}

GroupValues tau_cubic(int g) {
  if (g == 1) return {-0.1, -0.1, 0.1, std::nullopt, 0.2, std::nullopt};
  return {-3.0, 0.0, 3.0, -3.0, -6.0, 3.0, 0.0, 12.0, -3.0, 0.0};
}

GroupValues tau_quartic(int g) {
  if (g == 1) return {-6.0 / 35, -11.0 / 35, 6.0 / 35, -3.0 / 35, 4.0 / 5, 0.0};
  return {-24.0 / 5, 12.0 / 5, 24.0 / 5, -36.0 / 5, -84.0 / 5, 24.0 / 5, -36.0 / 5, 48.0, -54.0 / 5, 0.0};
}

std::vector<Real> tau_trig(Real b, int g) {
  const Real s = sinq(0.5 * b), c = cosq(0.5 * b);
  const Real p = c * c, p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const Real w = ipow(s, 8);
  const Real b2 = b * b;
  const Real bsc = b * s * c;
  if (g == 1) {
    const Real a = (384 - 81 * b2 - 2330 * p + 288 * b2 * p + 1770 * p2 - 180 * b2 * p2 + 312 * p3 -
                      136 * p4 - 3 * bsc * (37 - 286 * p)) /
                     (1152 * w);
    const Real bb = (-27 * b2 + 2 * (890 + 18 * b2) * p - 180 * (1 + b2) * p2 + 48 * (3 * b2 - 31) * p3 -
                       112 * p4 - 12 * bsc * (37 - 6 * p + 130 * p2 - 20 * p3)) /
                      (2304 * w);
    const Real cc = (640 - 45 * b2 - 12 * (143 + 3 * b2) * p + 36 * (93 - 7 * b2) * p2 -
                       16 * (169 - 9 * b2) * p3 + 432 * p4 + 12 * bsc * (1 + 14 * p - 38 * p2 - 4 * p3)) /
                      (2304 * w);
    const Real d = (-27 * b2 + 4 * (113 - 27 * b2) * p + 12 * (13 - 9 * b2) * p2 - 1200 * p3 + 592 * p4 +
                      12 * bsc * (9 + 6 * p - 14 * p2 + 20 * p3)) /
                     (2304 * w);
    const Real e = (-1408 + 261 * b2 + 4 * (1036 - 117 * b2) * p - 12 * (572 - 75 * b2) * p2 +
                      32 * (149 - 9 * b2) * p3 - 640 * p4 + 6 * bsc * (91 - 338 * p + 364 * p2 - 72 * p3)) /
                     (1152 * w);
    return {a, bb, cc, d, e, 0};
  }
  const Real a = (-336 - 27 * b2 - 4 * (319 - 63 * b2) * p + 12 * (181 - 21 * b2) * p2 - 864 * p3 +
                    304 * p4 + 12 * bsc * (1 + 74 * p)) /
                   (576 * w);
  const Real bb = (-144 - 27 * b2 - 4 * (451 - 63 * b2) * p + 84 * (23 - 3 * b2) * p2 + 288 * p3 -
                     272 * p4 + 12 * bsc * (19 + 62 * p)) /
                    (576 * w);
  const Real cc = (224 - 9 * b2 + 6 * (137 - 39 * b2) * p + 6 * (43 + 6 * b2) * p2 + 8 * (80 + 9 * b2) * p3 -
                     1944 * p4 + 3 * bsc * (131 - 242 * p - 472 * p2 - 80 * p3)) /
                    (1152 * w);
  const Real d = (-224 - 45 * b2 + 8 * (541 - 45 * b2) * p - 36 * (50 - 11 * b2) * p2 -
                    16 * (202 - 9 * b2) * p3 + 928 * p4 - 6 * bsc * (193 + 14 * p + 236 * p2 + 40 * p3)) /
                   (2304 * w);
  const Real e = (-384 - 54 * b2 + 2 * (1357 - 99 * b2) * p - 6 * (115 - 48 * b2) * p2 -
                    24 * (88 - 3 * b2) * p3 + 472 * p4 - 3 * bsc * (341 - 150 * p + 176 * p2 + 224 * p3)) /
                   (1152 * w);
  const Real f = (-224 - 45 * b2 + 12 * (131 - 15 * b2) * p - 12 * (79 + 15 * b2) * p2 + 2432 * p3 -
                    2832 * p4 + 24 * bsc * (49 - 53 * p - 43 * p2 - 10 * p3)) /
                   (2304 * w);
  const Real gg = (-192 - 27 * b2 + 4 * (143 - 27 * b2) * p + 12 * (115 - 9 * b2) * p2 - 1296 * p3 -
                     464 * p4 + 12 * bsc * (6 - 38 * p2 - 28 * p3)) /
                    (576 * w);
  const Real x = (1216 + 171 * b2 - 16 * (133 - 9 * b2) * p - 12 * (556 - 33 * b2) * p2 +
                    16 * (362 - 9 * b2) * p3 + 1792 * p4 + 6 * bsc * (77 - 250 * p + 476 * p2 + 264 * p3)) /
                   (576 * w);
  const Real h = (-480 - 27 * b2 - 4 * (41 + 27 * b2) * p + 12 * (463 - 9 * b2) * p2 - 5568 * p3 +
                    656 * p4 - 24 * bsc * (39 - 57 * p + 17 * p2 + 46 * p3)) /
                   (2304 * w);
  return {a, bb, cc, d, e, f, gg, x, h, 0};
}

std::vector<Real> tau_algtrig(Real b, int g) {
  const Real sb = sinq(b), cb = cosq(b);
  const Real S = sinq(0.5 * b), C = cosq(0.5 * b), p = C * C;
  const Real den = (2 * sb - b - b * cb) * (b - sb);
  const Real c1 = 1 / (b - sb);
  const Real c2 = sb / den;
  const Real c3 = 4 * (3 * b + 4 * sb - b * cb) * C / den;
  const Real c4 = 4 * sb * C / den;
  const Real b2 = b * b, b3 = b2 * b, b4 = b2 * b2;
  if (g == 1) {
    const Real a = c1 / 48 *
                     (-3 * c3 * (b * S + 2 * C - b2 * C - 2 * C * p) +
                      c4 * (6 * b * S + b3 * S + 12 * C - 9 * b2 * C - 12 * C * p + 6 * b * S * p));
    const Real cc = c2 / 96 *
                      (c3 * (b * S * (45 - 4 * b2 - 12 * p) + 3 * C * (14 - 9 * b2 - 14 * p)) -
                       c4 * (b * S * (39 + 18 * p - b2) + C * (78 - 36 * b2 - b4 - 6 * (2 * b2 + 13) * p)));
    const Real bb = b * c2 * S / 16 *
                      (c3 * (8 - b2 - 8 * p - 2 * b * S * C) + b * c4 * (b + 2 * b * p - 6 * S * C));
    const Real d = c2 / 96 *
                     (c3 * (b * (15 - 2 * b2 - 84 * p) * S + 3 * (58 - 7 * b2 - (58 - 4 * b2) * p) * C) +
                      c4 * (b * (15 + b2) * S - 6 * b * (25 - 2 * b2) * S * p +
                            (30 - 12 * b2 - b4 - (30 - 72 * b2) * p) * C));
    const Real e = (-3 * c3 * c3 * (4 - b2 - 4 * cb - b * sb) - 6 * c3 * c4 * (2 * b2 - 3 * b * sb + b2 * cb) +
                      b * c4 * c4 * (b3 - 3 * b2 * sb - 6 * b * cb + 6 * sb)) /
                     96;
    return {a, bb, cc, d, e, 0};
  }
  const Real a = -c1 / 48 *
                   (3 * c3 * (3 * b * S - 2 * C - b2 * C + 2 * C * p) +
                    c4 * (-b * (36 + b2) * S + 3 * (8 + 3 * b2 - 8 * p + 2 * b * S * C) * C));
  const Real bb = c1 / 48 *
                    (-3 * c3 * (b * S + (2 - b2 - 2 * p) * C) +
                     c4 * (b * (6 + b2) * S + 3 * (4 - 3 * b2 - 4 * p + 2 * b * S * C) * C));
  const Real cc = c2 / 96 *
                    (c3 * (b * (51 - 4 * b2 + 12 * p) * S - 7 * (6 + 3 * b2 - 6 * p) * C) -
                     c4 * (3 * b * (69 - 5 * b2 + 2 * p) * S - (162 + 78 * b2 + b4 - 6 * (27 + 2 * b2) * p) * C));
  const Real d = c2 / 96 *
                   (c3 * (b * (15 - 4 * b2) * S - 3 * (6 - b2 + 2 * (2 * b * S - 3 * C) * C) * C) -
                    c4 * (b * (63 - 19 * b2) * S -
                          (66 - 18 * b2 + b4 + 6 * (7 * b * S - (11 - 2 * b2) * C) * C) * C));
  const Real e = c2 / 16 *
                   (c3 * (-b3 * S - (16 - 4 * b2 - 2 * (2 * b * S + (8 - b2) * C) * C) * C) +
                    c4 * (5 * b3 * S + 2 * b * (-4 * b + ((6 - b2) * S + b * C) * C) * C));
  const Real f = c2 / 48 *
                   (3 * c3 * (b * S + (2 - b2 - 2 * p) * C) -
                    c4 * (b * (6 + b2) * S + 3 * (4 - 3 * b2 + 2 * (b * S - 2 * C) * C) * C));
  const Real gg = c2 / 96 *
                    (-c3 * (b * (15 + 2 * b2) * S - 3 * (38 - b2 - 2 * (2 * b * S + (19 + 2 * b2) * C) * C) * C) +
                     c4 * (b * (63 + 11 * b2) * S -
                           (66 + 6 * b2 + b4 + 6 * (b * (19 + 2 * b2) * S - (11 + 8 * b2) * C) * C) * C));
  const Real x = b / 96 *
                   (3 * c3 * c3 * (b - sb) - 6 * c3 * c4 * (4 * b - 3 * sb - b * cb) +
                    c4 * c4 * (48 * b + b3 - 30 * sb + 3 * b2 * sb - 18 * b * cb));
  const Real h = c2 / 96 *
                   (-c3 * (b * (15 + 2 * b2) * S - (18 + 9 * b2 + 6 * (2 * b * S - (2 * b2 + 3) * C) * C) * C) +
                    c4 * (b * (63 + 11 * b2) * S -
                          (66 + 18 * b2 + b4 + (6 * b * (7 + 2 * b2) * S - 6 * (11 + 4 * b2) * C) * C) * C));
  return {a, bb, cc, d, e, f, gg, x, h, 0};
}

}  // namespace

void validate_weights(const EnergyWeights& weights, const char* what) {
  bool positive = false;
  for (double v : weights.w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::ZeroWeights, std::string(what) + " weights must be finite and non-negative");
    }
    positive = positive || v > 0.0;
  }
  if (!positive) throw Error(ErrorCode::ZeroWeights, std::string(what) + " weights need a positive entry");
}

PhiTable phi_closed(const BasisFamily& family_in, int r) {
  const BasisFamily family = make_family(family_in.kind, family_in.beta);
  if (r != 1 && r != 2) throw Error(ErrorCode::DomainError, "closed phi tables exist for r = 1, 2 only");
  check_conditioning(family);
  PhiTable t;
  t.family = family;
  t.r = r;
  const double b = family.beta;
  switch (family.kind) {
    case FamilyKind::CubicBernstein:
      t.phi = r == 1 ? phi_from_core({-9.0 / 10, -3.0 / 5, 6.0 / 5, 3.0 / 10}, 9.0 / 5, -3.0 / 10)
                     : phi_from_core({-18.0, 0.0, 36.0, -18.0}, 12.0, 6.0);
      return t;
    case FamilyKind::QuarticBernsteinBlended:
      t.phi = r == 1 ? phi_from_core({-52.0 / 35, -24.0 / 35, 66.0 / 35, 2.0 / 7}, 16.0 / 7, -4.0 / 35)
                     : phi_from_core({-204.0 / 5, 36.0 / 5, 324.0 / 5, -156.0 / 5}, 144.0 / 5, 24.0 / 5);
      return t;
    default:
      break;
  }
  const PhiCore q = family.kind == FamilyKind::Trigonometric ? phi_trig(b, r)
                    : family.kind == FamilyKind::Hyperbolic  ? phi_hyperbolic(b, r)
                                                             : phi_algtrig(b, r);
  const DoublePhiCore core{static_cast<double>(q.p01), static_cast<double>(q.p02), static_cast<double>(q.p11),
                           static_cast<double>(q.p12)};
  // The corner entries phi_{0,0} and phi_{0,3} have no printed closed form.
  const double p03 = phi_single(UnivariateBasis(family), r, 0, 3, 1e-15);
  t.phi = phi_from_core(core, -(core.p01 + core.p02 + p03), p03);
  return t;
}

PhiTable phi_quadrature(const UnivariateBasis& basis, int r, double tol) {
  if (r < 0 || r > UnivariateBasis::max_derivative_order) {
    throw Error(ErrorCode::DomainError, "derivative order exceeds the basis order");
  }
  PhiTable t;
  t.family = basis.family();
  t.r = r;
  QuadratureOptions opt;
  opt.tol = tol;
  const VectorIntegrand f = [&](double x) {
    const BasisJet j = basis.eval_all(x);
    Eigen::VectorXd out(16);
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) out(4 * k + l) = j(k, r) * j(l, r);
    return out;
  };
  const Eigen::VectorXd v = integrate(f, 0.0, basis.beta(), opt);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) t.phi(k, l) = v(4 * k + l);
  return t;
}

CombinedPhi combine_phi(const PhiTable& r1, const PhiTable& r2, const EnergyWeights& theta) {
  validate_weights(theta, "curve");
  if (theta.w.size() > 2) throw Error(ErrorCode::ConfigError, "closed tables support at most two curve weights");
  CombinedPhi m = theta.w[0] * r1.phi;
  if (theta.w.size() > 1) m += theta.w[1] * r2.phi;
  return m;
}

CombinedPhi combined_phi(const BasisFamily& family, const EnergyWeights& theta) {
  validate_weights(theta, "curve");
  const PhiTable t1 = phi_closed(family, 1);
  const PhiTable t2 = theta.w.size() > 1 ? phi_closed(family, 2) : t1;
  return combine_phi(t1, t2, theta);
}

TauTable tau_closed(const BasisFamily& family_in, int g) {
  const BasisFamily family = make_family(family_in.kind, family_in.beta);
  if (g != 1 && g != 2) throw Error(ErrorCode::DomainError, "closed tau tables exist for g = 1, 2 only");
  check_conditioning(family);
  GroupValues values;
  switch (family.kind) {
    case FamilyKind::CubicBernstein:
      values = tau_cubic(g);
      break;
    case FamilyKind::QuarticBernsteinBlended:
      values = tau_quartic(g);
      break;
    case FamilyKind::Trigonometric:
      values = to_double(tau_trig(family.beta, g));
      break;
    case FamilyKind::AlgebraicTrigonometric:
      values = to_double(tau_algtrig(family.beta, g));
      break;
    case FamilyKind::Hyperbolic:
      throw Error(ErrorCode::UnsupportedFamily, "no closed tau table for the hyperbolic family");
  }
  TauTable t = assemble_tau(family, g, values);

  bool complete = true;
  for (const auto& m : t.printed) complete = complete && m.all();
  if (!complete) {
    // Omitted entries: keep 0 unless quadrature shows they matter.
    const TauTable q = tau_quadrature(TrivariateBasis(family), g, 1e-13);
    for (int z = 0; z <= g; ++z)
      for (int i = 0; i < kTriCount; ++i)
        if (!t.printed[z](i) && std::abs(q.column[z](i)) > 1e-8) t.column[z](i) = q.column[z](i);
  }
  return t;
}

TauTable tau_quadrature(const TrivariateBasis& basis, int g, double tol) {
  if (g < 1 || g > 2) throw Error(ErrorCode::DomainError, "tau quadrature supports g = 1, 2");
  TauTable t;
  t.family = basis.family();
  t.g = g;
  t.column.assign(g + 1, TauColumn::Zero());
  t.printed.assign(g + 1, Eigen::Matrix<bool, kTriCount, 1>::Constant(false));
  QuadratureOptions opt;
  opt.tol = tol;
  const int n = (g + 1) * kTriCount;
  const VectorIntegrand2 f = [&](double x, double y) {
    const TriJet j = basis.chart_jets(x, y);
    Eigen::VectorXd out(n);
    for (int z = 0; z <= g; ++z) {
      const int col = tri_jet_column(z, g - z);
      for (int i = 0; i < kTriCount; ++i) out(z * kTriCount + i) = j(i, col) * j(kTri111, col);
    }
    return out;
  };
  const Eigen::VectorXd v = integrate_triangle(f, basis.beta(), opt);
  for (int z = 0; z <= g; ++z) t.column[z] = v.segment<kTriCount>(z * kTriCount);
  return t;
}

TauTable tau_table(const TrivariateBasis& basis, int g) {
  if (basis.family().kind == FamilyKind::Hyperbolic) return tau_quadrature(basis, g);
  return tau_closed(basis.family(), g);
}

Eigen::Matrix<double, kTriCount, kTriCount> tau_gram(const TrivariateBasis& basis, int z, int g_minus_z,
                                                      double tol) {
  const int col = tri_jet_column(z, g_minus_z);
  QuadratureOptions opt;
  opt.tol = tol;
  const VectorIntegrand2 f = [&](double x, double y) {
    const TriJet j = basis.chart_jets(x, y);
    Eigen::VectorXd out(kTriCount * kTriCount);
    for (int a = 0; a < kTriCount; ++a)
      for (int b = 0; b < kTriCount; ++b) out(a * kTriCount + b) = j(a, col) * j(b, col);
    return out;
  };
  const Eigen::VectorXd v = integrate_triangle(f, basis.beta(), opt);
  Eigen::Matrix<double, kTriCount, kTriCount> m;
  for (int a = 0; a < kTriCount; ++a)
    for (int b = 0; b < kTriCount; ++b) m(a, b) = v(a * kTriCount + b);
  return m;
}

std::string phi_symbol(int r, int k, int l) {
  std::ostringstream os;
  os << "phi^" << r << "_" << k << "," << l;
  return os.str();
}

std::string tau_symbol(int z, int g_minus_z, int flat) {
  const auto [r, s] = tri_index(flat);
  std::ostringstream os;
  os << "tau^" << z << "," << g_minus_z << "_" << r << "," << s << "," << 3 - r - s;
  return os.str();
}

}  // namespace nielson
