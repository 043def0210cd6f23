#include "bgg/pathgeom.hpp"

#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {
namespace pathgeom {

namespace {

Weight w3(const Rational& a, const Rational& b, const Rational& c) {
  Weight w = Weight::Zero(3);
  w(0) = a;
  w(1) = b;
  w(2) = c;
  return w;
}

}  // namespace

BundleName make_bundle_name(int sym_degree, const Rational& a, const Rational& b) {
  BundleName n;
  n.sym_degree = sym_degree;
  n.density_a = a;
  n.density_b = b;
  std::ostringstream os;
  if (sym_degree == 0) {
    os << "E(" << a << "," << b << ")";
  } else if (sym_degree == 1) {
    os << "V*(" << a << "," << b << ")";
  } else {
    os << "S^" << sym_degree << "V*(" << a << "," << b << ")";
  }
  n.rendered = os.str();
  return n;
}

Weight bundle_to_weight(const BundleName& b) {
  return w3(b.density_a + Rational(b.sym_degree), b.density_b - Rational(2 * b.sym_degree),
            Rational(b.sym_degree));
}

BundleName weight_to_bundle(const Weight& w) {
  if (w.size() != 3) throw ParseError("weight_to_bundle: expected a rank-3 weight");
  if (!w(2).is_integer() || w(2).is_negative()) {
    throw RepresentabilityError("weight_to_bundle: third coordinate must be a natural number");
  }
  long long c = w(2).num().to_ll();
  return make_bundle_name(static_cast<int>(c), w(0) - w(2), w(1) + Rational(2) * w(2));
}

PathSequence sequence(const PathGeomCase& c) {
  if (c.k < 0 || c.l < 0) throw ParseError("sequence: k and l must be nonnegative");
  PathSequence s;
  Rational w = c.w;
  Rational k(c.k), l(c.l);
  s.weights[0] = w3(w + k, l, k);
  s.weights[1] = w3(w + k + l + Rational(1), -l - Rational(2), k + l + Rational(1));
  s.weights[2] = w3(w + Rational(2) * k + l + Rational(2), -k - l - Rational(3), l);
  s.bundles[0] = make_bundle_name(c.k, w, Rational(2 * c.k + c.l));
  s.bundles[1] = make_bundle_name(c.k + c.l + 1, w, Rational(2 * c.k + c.l));
  s.bundles[2] = make_bundle_name(c.l, w + Rational(2 * c.k + 2), Rational(c.l - c.k - 3));
  s.orders = {c.l + 1, c.k + 1};
  return s;
}

SubsequenceClass classify_subsequence(const PathGeomCase& c) {
  if (!c.w.is_integer()) return SubsequenceClass::None;
  Rational a = c.w + Rational(c.k);                    // w + k
  Rational ab = a + Rational(c.l);                     // w + k + l
  Rational abc = ab + Rational(c.k);                   // w + 2k + l
  auto ge = [](const Rational& x, long long v) { return x >= Rational(v); };
  auto le = [](const Rational& x, long long v) { return x <= Rational(v); };
  if (ge(a, 0)) return SubsequenceClass::A;
  if (le(a, -2) && ge(ab, -1)) return SubsequenceClass::B;
  if (le(ab, -3) && ge(abc, -2)) return SubsequenceClass::C;
  if (le(abc, -4)) return SubsequenceClass::D;
  return SubsequenceClass::None;
}

std::string class_name(SubsequenceClass c) {
  switch (c) {
    case SubsequenceClass::A: return "case-A";
    case SubsequenceClass::B: return "case-B";
    case SubsequenceClass::C: return "case-C";
    case SubsequenceClass::D: return "case-D";
    default: return "none";
  }
}

SingularityInfo singular_character(const PathGeomCase& c) {
  SingularityInfo info;
  if (c.w == Rational(-1 - c.k)) {
    info.singular = true;
    info.wall = 1;
  } else if (c.w == Rational(-2 - c.k - c.l)) {
    info.singular = true;
    info.wall = 2;
  } else if (c.w == Rational(-3 - 2 * c.k - c.l)) {
    info.singular = true;
    info.wall = 3;
  }
  return info;
}

TensorBundleLabel tensor_bundle(const PathGeomCase& c) {
  TensorBundleLabel t;
  t.tn_power = c.k;
  t.tstar_power = c.l;
  t.density = c.w + Rational(2 * c.l);
  std::ostringstream os;
  if (c.k == 0 && c.l == 0) {
    os << "E[" << t.density << "]";
  } else if (c.l == 0) {
    os << "S^" << c.k << "TN[" << t.density << "]";
  } else if (c.k == 0) {
    os << "S^" << c.l << "T*N[" << t.density << "]";
  } else {
    os << "T^" << c.k << "_" << c.l << "[" << t.density << "]";
  }
  t.rendered = os.str();
  // weight of the trace-free part of S^l T*N (x) S^k TN, shifted by the
  // density: (k - 2l + w + 2l, l, k) = (w + k, l, k)
  t.weight = w3(Rational(c.k - 2 * c.l) + t.density, Rational(c.l), Rational(c.k));
  t.note =
      "on a path geometry with involutive vertical distribution the sequence "
      "resolves the pullback of sections of this bundle from the leaf space";
  return t;
}

EngineValidation validate_with_engine(const PathGeomCase& c) {
  PathSequence s = sequence(c);
  RootSystem rs = build_root_system(3);
  ParabolicPair pair = build_pair(rs, {1}, {1, 2});
  RelativeComplex cx = build_complex_from_label(pair, s.weights[0]);
  EngineValidation v;
  v.engine = summary_label_multiset(homology(cx));
  v.predicted.resize(3);
  for (int i = 0; i < 3; ++i) v.predicted[static_cast<size_t>(i)] = {weight_str(s.weights[static_cast<size_t>(i)])};
  v.match = (v.engine == v.predicted);
  return v;
}

}  // namespace pathgeom
}  // namespace bgg
