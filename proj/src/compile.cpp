#include "geoprove/compile.hpp"

#include <algorithm>
#include <set>

#include "geoprove/errors.hpp"

namespace geoprove {

const ScenePoint& CompiledScene::point(const std::string& name) const {
  for (const auto& [n, p] : points)
    if (n == name) return p;
  throw MathError("unknown point '" + name + "'");
}

const SceneLine& CompiledScene::line(const std::string& name) const {
  for (const auto& [n, l] : lines)
    if (n == name) return l;
  throw MathError("unknown line '" + name + "'");
}

namespace {

using RF = RationalFunction;

struct Vec2 {
  RF x, y;
};

RF cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
RF dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Builds a scene step by step, collecting the nondegeneracy ledger.
class SceneBuilder {
 public:
  explicit SceneBuilder(const GeoProgram& prog) : prog_(prog) {
    scene_.table = prog.variables;
  }

  CompiledScene build() {
    for (const auto& step : prog_.steps) emit(step);
    std::vector<Polynomial> nd(by_text_.size(), Polynomial(scene_.table));
    std::size_t i = 0;
    for (const auto& [text, poly] : by_text_) nd[i++] = poly;
    scene_.nondegeneracy = std::move(nd);
    return std::move(scene_);
  }

 private:
  RF half() const { return RF::constant(scene_.table, rat(1, 2)); }
  RF third() const { return RF::constant(scene_.table, rat(1, 3)); }
  RF two() const { return RF::constant(scene_.table, rat(2)); }

  // Record a polynomial that must not vanish; constants carry no content.
  void record_nonzero(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return;
    Polynomial c = canonicalize(squarefree_part(p));
    by_text_.emplace(c.str(), c);
  }

  // Division with a ledger entry; throws when the divisor is identically 0.
  RF guarded_div(const RF& num, const RF& den, const ConstructionStep& step,
                 const char* what) {
    if (den.is_zero())
      throw CompileError(std::string(step_kind_name(step.kind)) + " '" + step.name +
                         "' is identically degenerate: " + what + " vanishes everywhere");
    record_nonzero(den.num());
    return num / den;
  }

  void add_point(const std::string& name, ScenePoint p) {
    record_nonzero(p.x.den());
    record_nonzero(p.y.den());
    scene_.points.emplace_back(name, std::move(p));
  }

  void add_line(const std::string& name, const ConstructionStep& step, SceneLine l) {
    if (l.dir.x.is_zero() && l.dir.y.is_zero())
      throw CompileError("line '" + step.name + "' is identically degenerate: both defining "
                         "points coincide");
    record_nonzero(l.anchor.x.den());
    record_nonzero(l.anchor.y.den());
    record_nonzero(l.dir.x.den());
    record_nonzero(l.dir.y.den());
    scene_.lines.emplace_back(name, std::move(l));
  }

  const ScenePoint& pt(const std::string& name) const { return scene_.point(name); }
  const SceneLine& ln(const std::string& name) const { return scene_.line(name); }

  SceneLine line_between(const ScenePoint& p, const ScenePoint& q) const {
    return {p, {q.x - p.x, q.y - p.y}};
  }

  static ScenePoint rot90(const ScenePoint& d) { return {-d.y, d.x}; }

  ScenePoint intersect_lines(const SceneLine& l, const SceneLine& m,
                             const ConstructionStep& step) {
    Vec2 ld{l.dir.x, l.dir.y}, md{m.dir.x, m.dir.y};
    Vec2 diff{m.anchor.x - l.anchor.x, m.anchor.y - l.anchor.y};
    RF t = guarded_div(cross(diff, md), cross(ld, md), step,
                       "the direction cross product (parallel or coincident lines)");
    return {l.anchor.x + t * l.dir.x, l.anchor.y + t * l.dir.y};
  }

  ScenePoint foot_of(const ScenePoint& p, const SceneLine& l, const ConstructionStep& step) {
    Vec2 d{l.dir.x, l.dir.y};
    Vec2 ap{p.x - l.anchor.x, p.y - l.anchor.y};
    RF t = guarded_div(dot(ap, d), dot(d, d), step, "the squared direction length");
    return {l.anchor.x + t * l.dir.x, l.anchor.y + t * l.dir.y};
  }

  ScenePoint circumcenter_of(const ScenePoint& p, const ScenePoint& q, const ScenePoint& r,
                             const ConstructionStep& step) {
    // 2(q-p)·X = |q|^2 - |p|^2 and 2(r-p)·X = |r|^2 - |p|^2, by Cramer.
    RF ex = two() * (q.x - p.x), ey = two() * (q.y - p.y);
    RF fx = two() * (r.x - p.x), fy = two() * (r.y - p.y);
    RF u = q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y;
    RF v = r.x * r.x + r.y * r.y - p.x * p.x - p.y * p.y;
    RF det = ex * fy - ey * fx;
    RF x = guarded_div(u * fy - v * ey, det, step, "the collinearity determinant");
    RF y = guarded_div(ex * v - fx * u, det, step, "the collinearity determinant");
    return {std::move(x), std::move(y)};
  }

  void emit(const ConstructionStep& step) {
    switch (step.kind) {
      case StepKind::free_point:
        add_point(step.name, {step.coords->first, step.coords->second});
        return;
      case StepKind::midpoint: {
        const auto& p = pt(step.args[0]);
        const auto& q = pt(step.args[1]);
        add_point(step.name, {(p.x + q.x) * half(), (p.y + q.y) * half()});
        return;
      }
      case StepKind::centroid: {
        const auto& p = pt(step.args[0]);
        const auto& q = pt(step.args[1]);
        const auto& r = pt(step.args[2]);
        add_point(step.name, {(p.x + q.x + r.x) * third(), (p.y + q.y + r.y) * third()});
        return;
      }
      case StepKind::circumcenter:
        add_point(step.name, circumcenter_of(pt(step.args[0]), pt(step.args[1]),
                                             pt(step.args[2]), step));
        return;
      case StepKind::orthocenter: {
        // Intersection of the heights from the second and first vertices.
        const auto& p = pt(step.args[0]);
        const auto& q = pt(step.args[1]);
        const auto& r = pt(step.args[2]);
        SceneLine side_pr = line_between(p, r);
        SceneLine side_qr = line_between(q, r);
        if ((side_pr.dir.x.is_zero() && side_pr.dir.y.is_zero()) ||
            (side_qr.dir.x.is_zero() && side_qr.dir.y.is_zero()))
          throw CompileError("orthocenter '" + step.name +
                             "' is identically degenerate: two vertices coincide");
        SceneLine height_q{q, rot90(side_pr.dir)};
        SceneLine height_p{p, rot90(side_qr.dir)};
        add_point(step.name, intersect_lines(height_q, height_p, step));
        return;
      }
      case StepKind::intersect:
        add_point(step.name, intersect_lines(ln(step.args[0]), ln(step.args[1]), step));
        return;
      case StepKind::foot:
        add_point(step.name, foot_of(pt(step.args[0]), ln(step.args[1]), step));
        return;
      case StepKind::reflection: {
        const auto& p = pt(step.args[0]);
        ScenePoint f = foot_of(p, ln(step.args[1]), step);
        add_point(step.name, {two() * f.x - p.x, two() * f.y - p.y});
        return;
      }
      case StepKind::line_through:
        add_line(step.name, step, line_between(pt(step.args[0]), pt(step.args[1])));
        return;
      case StepKind::perpendicular_through:
        add_line(step.name, step, {pt(step.args[0]), rot90(ln(step.args[1]).dir)});
        return;
      case StepKind::parallel_through:
        add_line(step.name, step, {pt(step.args[0]), ln(step.args[1]).dir});
        return;
    }
    throw MathError("unhandled construction kind");
  }

  const GeoProgram& prog_;
  CompiledScene scene_;
  std::map<std::string, Polynomial> by_text_;
};

// ------------------------------------------------------------ predicates

// Degree-bound scalar: numerator/denominator total-degree pair flowing
// through the same formulas the exact evaluation uses. Sums account for the
// common denominator; products add; nothing is ever expanded.
struct DegBound {
  int num = 0;
  int den = 0;

  DegBound operator+(const DegBound& o) const {
    return {std::max(num + o.den, o.num + den), den + o.den};
  }
  DegBound operator-(const DegBound& o) const { return *this + o; }
  DegBound operator*(const DegBound& o) const { return {num + o.num, den + o.den}; }
};

DegBound measure(const RF& f) {
  int nd = f.num().is_zero() ? 0 : f.num().total_degree();
  return {nd, f.den().total_degree()};
}

template <typename S>
struct PointView {
  S x, y;
};

// Generic predicate expression over any scalar with +,-,*.
template <typename S, typename PointAt, typename LineAt>
S predicate_expr(const PredicateAst& pred, PointAt point_at, LineAt line_at) {
  auto diff = [](const PointView<S>& p, const PointView<S>& q) {
    return PointView<S>{p.x - q.x, p.y - q.y};
  };
  auto cross2 = [](const PointView<S>& u, const PointView<S>& v) {
    return u.x * v.y - u.y * v.x;
  };
  auto dot2 = [](const PointView<S>& u, const PointView<S>& v) {
    return u.x * v.x + u.y * v.y;
  };

  switch (pred.kind) {
    case PredKind::collinear: {
      PointView<S> p = point_at(pred.args[0]), q = point_at(pred.args[1]),
                   r = point_at(pred.args[2]);
      return cross2(diff(q, p), diff(r, p));
    }
    case PredKind::perpendicular: {
      PointView<S> p = point_at(pred.args[0]), q = point_at(pred.args[1]),
                   r = point_at(pred.args[2]), s = point_at(pred.args[3]);
      return dot2(diff(q, p), diff(s, r));
    }
    case PredKind::parallel: {
      PointView<S> p = point_at(pred.args[0]), q = point_at(pred.args[1]),
                   r = point_at(pred.args[2]), s = point_at(pred.args[3]);
      return cross2(diff(q, p), diff(s, r));
    }
    case PredKind::equal_length: {
      PointView<S> p = point_at(pred.args[0]), q = point_at(pred.args[1]),
                   r = point_at(pred.args[2]), s = point_at(pred.args[3]);
      PointView<S> u = diff(q, p), v = diff(s, r);
      return dot2(u, u) - dot2(v, v);
    }
    case PredKind::point_on_line: {
      PointView<S> p = point_at(pred.args[0]);
      auto [anchor, dir] = line_at(pred.args[1]);
      return cross2(diff(p, anchor), dir);
    }
    case PredKind::concyclic: {
      // det of rows (x^2 + y^2, x, y, 1): Laplace expansion along the last
      // column into 3x3 minors over (x^2 + y^2, x, y).
      PointView<S> P[4] = {point_at(pred.args[0]), point_at(pred.args[1]),
                           point_at(pred.args[2]), point_at(pred.args[3])};
      S w[4] = {P[0].x * P[0].x + P[0].y * P[0].y, P[1].x * P[1].x + P[1].y * P[1].y,
                P[2].x * P[2].x + P[2].y * P[2].y, P[3].x * P[3].x + P[3].y * P[3].y};
      auto minor3 = [&](int i, int j, int k) {
        return w[i] * (P[j].x * P[k].y - P[j].y * P[k].x) -
               w[j] * (P[i].x * P[k].y - P[i].y * P[k].x) +
               w[k] * (P[i].x * P[j].y - P[i].y * P[j].x);
      };
      S m0 = minor3(1, 2, 3), m1 = minor3(0, 2, 3), m2 = minor3(0, 1, 3),
        m3 = minor3(0, 1, 2);
      return m0 - m1 + (m2 - m3);
    }
  }
  throw MathError("unhandled predicate kind");
}

RF predicate_value(const PredicateAst& pred, const CompiledScene& scene) {
  auto point_at = [&](const std::string& name) {
    const ScenePoint& p = scene.point(name);
    return PointView<RF>{p.x, p.y};
  };
  auto line_at = [&](const std::string& name) {
    const SceneLine& l = scene.line(name);
    return std::make_pair(PointView<RF>{l.anchor.x, l.anchor.y},
                          PointView<RF>{l.dir.x, l.dir.y});
  };
  return predicate_expr<RF>(pred, point_at, line_at);
}

}  // namespace

CompiledScene compile_scene(const GeoProgram& prog) { return SceneBuilder(prog).build(); }

int degree_bound(const PredicateAst& pred, const CompiledScene& scene) {
  auto point_at = [&](const std::string& name) {
    const ScenePoint& p = scene.point(name);
    return PointView<DegBound>{measure(p.x), measure(p.y)};
  };
  auto line_at = [&](const std::string& name) {
    const SceneLine& l = scene.line(name);
    return std::make_pair(PointView<DegBound>{measure(l.anchor.x), measure(l.anchor.y)},
                          PointView<DegBound>{measure(l.dir.x), measure(l.dir.y)});
  };
  return predicate_expr<DegBound>(pred, point_at, line_at).num;
}

PredicatePolynomial compile_predicate(const PredicateAst& pred, const CompiledScene& scene) {
  RF value = predicate_value(pred, scene);
  PredicatePolynomial out{Polynomial(scene.table), Polynomial(scene.table),
                          scene.nondegeneracy, degree_bound(pred, scene)};
  if (!value.is_zero()) {
    out.raw = canonicalize(value.num());
    out.poly = canonicalize(squarefree_part(out.raw));
  }
  return out;
}

}  // namespace geoprove
