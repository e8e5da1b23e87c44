#include "cutstokes/quadrature.hpp"

namespace cutstokes {

namespace {

void push_orbit3(TriRule& r, double a, double w) {
  const double c = 1.0 - 2.0 * a;
  r.points.push_back({c, a, a});
  r.points.push_back({a, c, a});
  r.points.push_back({a, a, c});
  r.weights.insert(r.weights.end(), 3, w);
}

void push_orbit6(TriRule& r, double a, double b, double w) {
  const double c = 1.0 - a - b;
  r.points.push_back({a, b, c});
  r.points.push_back({b, a, c});
  r.points.push_back({a, c, b});
  r.points.push_back({c, a, b});
  r.points.push_back({b, c, a});
  r.points.push_back({c, b, a});
  r.weights.insert(r.weights.end(), 6, w);
}

void scale_to_reference_measure(TriRule& r) {
  for (double& w : r.weights) {
    w *= 0.5;
  }
}

}  // namespace

TriRule triangle_rule(int degree) {
  TriRule r;
  switch (degree) {
    case 1:
      r.degree = 1;
      r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
      r.weights.push_back(1.0);
      break;
    case 2:
      r.degree = 2;
      push_orbit3(r, 1.0 / 6.0, 1.0 / 3.0);
      break;
    case 3:  // the classical 4-point degree-3 rule has a negative weight;
    case 4:  // serve the positive 6-point degree-4 rule for both
      r.degree = 4;
      push_orbit3(r, 0.445948490915965, 0.223381589678011);
      push_orbit3(r, 0.091576213509771, 0.109951743655322);
      break;
    case 5:
      r.degree = 5;
      r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
      r.weights.push_back(9.0 / 40.0);
      push_orbit3(r, 0.470142064105115, 0.132394152788506);
      push_orbit3(r, 0.101286507323456, 0.125939180544827);
      break;
    case 6:
      r.degree = 6;
      push_orbit3(r, 0.063089014491502, 0.050844906370207);
      push_orbit3(r, 0.249286745170910, 0.116786275726379);
      push_orbit6(r, 0.310352451033785, 0.053145049844816, 0.082851075618374);
      break;
    default:
      throw InvalidInput("triangle_rule supports degrees 1..6");
  }
  scale_to_reference_measure(r);
  return r;
}

SegRule segment_rule(int degree) {
  if (degree < 1 || degree > 7) {
    throw InvalidInput("segment_rule supports degrees 1..7");
  }
  SegRule r;
  if (degree <= 1) {
    r.degree = 1;
    r.points = {0.5};
    r.weights = {1.0};
  } else if (degree <= 3) {
    r.degree = 3;
    const double d = 0.5 / std::sqrt(3.0);
    r.points = {0.5 - d, 0.5 + d};
    r.weights = {0.5, 0.5};
  } else if (degree <= 5) {
    r.degree = 5;
    const double d = 0.5 * std::sqrt(3.0 / 5.0);
    r.points = {0.5 - d, 0.5, 0.5 + d};
    r.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  } else {
    r.degree = 7;
    const double x1 = 0.3399810435848563;
    const double x2 = 0.8611363115940526;
    const double w1 = 0.6521451548625461;
    const double w2 = 0.3478548451374538;
    r.points = {0.5 * (1.0 - x2), 0.5 * (1.0 - x1), 0.5 * (1.0 + x1), 0.5 * (1.0 + x2)};
    r.weights = {0.5 * w2, 0.5 * w1, 0.5 * w1, 0.5 * w2};
  }
  return r;
}

MappedRule map_to_triangle(const TriRule& rule, const Triangle& tri) {
  MappedRule m;
  const double jac = 2.0 * triangle_area(tri);
  m.points.reserve(rule.points.size());
  m.weights.reserve(rule.weights.size());
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const auto& l = rule.points[q];
    m.points.push_back(l[0] * tri[0] + l[1] * tri[1] + l[2] * tri[2]);
    m.weights.push_back(rule.weights[q] * jac);
  }
  return m;
}

MappedRule map_to_segment(const SegRule& rule, const Vec2& a, const Vec2& b) {
  MappedRule m;
  const double len = (b - a).norm();
  m.points.reserve(rule.points.size());
  m.weights.reserve(rule.weights.size());
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    m.points.push_back(a + rule.points[q] * (b - a));
    m.weights.push_back(rule.weights[q] * len);
  }
  return m;
}

}  // namespace cutstokes
