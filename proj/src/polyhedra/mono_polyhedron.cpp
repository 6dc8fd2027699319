#include "reglab/polyhedra/mono_polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace reglab {

namespace {

bool dominates(const Point& lo, const Point& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (lo[i] > v[i]) return false;
    return true;
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

Halfspace primitive(const RVector& a, const Rational& b) {
    mpz_class l = 1;
    for (const auto& v : a) l = lcm(l, mpz_class(v.get_den()));
    l = lcm(l, mpz_class(b.get_den()));
    Halfspace h;
    mpz_class g = 0;
    for (const auto& v : a) {
        mpz_class z = mpz_class(v * l);
        h.normal.push_back(z);
        g = gcd(g, z);
    }
    h.rhs = mpz_class(b * l);
    g = gcd(g, h.rhs);
    if (g != 0 && g != 1) {
        for (auto& z : h.normal) z /= g;
        h.rhs /= g;
    }
    return h;
}

}  // namespace

Rational coordinate_sum(const Point& p) {
    Rational s = 0;
    for (const auto& v : p) s += v;
    return s;
}

std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += p[i].get_str();
    }
    return out + ")";
}

bool in_orthant_hull(const std::vector<Point>& points, const Point& v) {
    if (points.empty()) return false;
    for (const auto& p : points)
        if (dominates(p, v)) return true;
    const std::size_t r = v.size(), m = points.size();
    // lambda (m) then slack (r):  sum lambda_k p_k + s = v,  sum lambda = 1.
    RMatrix A(r + 1, RVector(m + r));
    RVector b(r + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < m; ++k) A[i][k] = points[k][i];
        A[i][m + i] = 1;
        b[i] = v[i];
    }
    for (std::size_t k = 0; k < m; ++k) A[r][k] = 1;
    b[r] = 1;
    return lp_feasible(A, b);
}

MonoPolyhedron::MonoPolyhedron(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("polyhedron needs at least one point");
    for (const auto& p : points_) {
        if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
        for (const auto& v : p)
            if (sgn(v) < 0) throw std::invalid_argument("points must lie in the nonnegative orthant");
    }
    sort_unique(points_);
}

bool MonoPolyhedron::contains(const Point& v) const {
    if (v.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    return in_orthant_hull(vertices(), v);
}

const std::vector<Point>& MonoPolyhedron::vertices() const {
    if (vertices_) return *vertices_;
    // Drop points that dominate another point, then test the rest by LP.
    std::vector<Point> cand;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points_.size() && !dominated; ++j)
            dominated = j != i && dominates(points_[j], points_[i]);
        if (!dominated) cand.push_back(points_[i]);
    }
    std::vector<Point> verts;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != i) others.push_back(cand[j]);
        if (others.empty() || !in_orthant_hull(others, cand[i])) verts.push_back(cand[i]);
    }
    vertices_ = std::make_shared<const std::vector<Point>>(std::move(verts));
    return *vertices_;
}

Rational MonoPolyhedron::delta() const {
    Rational best = 0;
    bool first = true;
    for (const auto& v : vertices()) {
        Rational s = coordinate_sum(v);
        if (first || s > best) best = s;
        first = false;
    }
    return best;
}

MonoPolyhedron MonoPolyhedron::scaled(const Rational& c) const {
    if (sgn(c) <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Point> pts = vertices();
    for (auto& p : pts)
        for (auto& v : p) v *= c;
    return MonoPolyhedron(dim_, std::move(pts));
}

bool MonoPolyhedron::equals(const MonoPolyhedron& other) const {
    if (dim_ != other.dim_) return false;
    if (vertices() == other.vertices()) return true;
    for (const auto& v : vertices())
        if (!other.contains(v)) return false;
    for (const auto& v : other.vertices())
        if (!contains(v)) return false;
    return true;
}

MonoPolyhedron minkowski_sum(const MonoPolyhedron& a, const MonoPolyhedron& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<Point> pts;
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices()) {
            Point s(a.dim_);
            for (std::size_t i = 0; i < a.dim_; ++i) s[i] = p[i] + q[i];
            pts.push_back(std::move(s));
        }
    return MonoPolyhedron(a.dim_, std::move(pts));
}

std::vector<Halfspace> MonoPolyhedron::to_halfspaces() const {
    if (dim_ > kHalfspaceMaxDim)
        throw std::invalid_argument("halfspace conversion is capped at dimension " +
                                    std::to_string(kHalfspaceMaxDim));
    const auto& V = vertices();
    const std::size_t r = dim_;
    std::vector<Halfspace> out;
    auto try_candidate = [&](const std::vector<std::size_t>& pts, const std::vector<std::size_t>& rays) {
        RMatrix A;
        for (auto ray : rays) {
            RVector row(r);
            row[ray] = 1;
            A.push_back(row);
        }
        for (std::size_t k = 1; k < pts.size(); ++k) {
            RVector row(r);
            for (std::size_t i = 0; i < r; ++i) row[i] = V[pts[k]][i] - V[pts[0]][i];
            A.push_back(row);
        }
        auto ns = nullspace(A, r);
        if (ns.size() != 1) return;
        RVector a = ns[0];
        bool pos = false, neg = false;
        for (const auto& v : a) {
            if (sgn(v) > 0) pos = true;
            if (sgn(v) < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg)
            for (auto& v : a) v = -v;
        Rational b = 0;
        for (std::size_t i = 0; i < r; ++i) b += a[i] * V[pts[0]][i];
        for (const auto& v : V) {
            Rational s = 0;
            for (std::size_t i = 0; i < r; ++i) s += a[i] * v[i];
            if (s < b) return;
        }
        Halfspace h = primitive(a, b);
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    };
    // A facet is spanned by k >= 1 vertices and r - k coordinate rays.
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<std::size_t> pts, rays;
        std::function<void(std::size_t)> pick_rays = [&](std::size_t start) {
            if (rays.size() == r - k) {
                try_candidate(pts, rays);
                return;
            }
            for (std::size_t i = start; i < r; ++i) {
                rays.push_back(i);
                pick_rays(i + 1);
                rays.pop_back();
            }
        };
        std::function<void(std::size_t)> pick_pts = [&](std::size_t start) {
            if (pts.size() == k) {
                pick_rays(0);
                return;
            }
            for (std::size_t i = start; i < V.size(); ++i) {
                pts.push_back(i);
                pick_pts(i + 1);
                pts.pop_back();
            }
        };
        pick_pts(0);
    }
    std::sort(out.begin(), out.end(), [](const Halfspace& x, const Halfspace& y) {
        if (x.normal != y.normal) return x.normal > y.normal;
        return x.rhs < y.rhs;
    });
    return out;
}

MonoPolyhedron MonoPolyhedron::from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hs) {
    if (dim > kHalfspaceMaxDim)
        throw std::invalid_argument("halfspace conversion is capped at dimension " +
                                    std::to_string(kHalfspaceMaxDim));
    std::vector<Halfspace> all = hs;
    for (std::size_t i = 0; i < dim; ++i) {
        Halfspace h;
        h.normal.assign(dim, 0);
        h.normal[i] = 1;
        h.rhs = 0;
        all.push_back(h);
    }
    for (const auto& h : all) {
        if (h.normal.size() != dim) throw std::invalid_argument("halfspace dimension mismatch");
        for (const auto& a : h.normal)
            if (a < 0) throw std::invalid_argument("normals must be nonnegative for an orthant recession cone");
    }
    auto satisfies = [&](const Point& x) {
        for (const auto& h : all) {
            Rational s = 0;
            for (std::size_t i = 0; i < dim; ++i) s += Rational(h.normal[i]) * x[i];
            if (s < Rational(h.rhs)) return false;
        }
        return true;
    };
    std::vector<Point> verts;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (idx.size() == dim) {
            RMatrix A;
            RVector b;
            for (auto i : idx) {
                RVector row(dim);
                for (std::size_t j = 0; j < dim; ++j) row[j] = all[i].normal[j];
                A.push_back(row);
                b.push_back(Rational(all[i].rhs));
            }
            auto x = solve_square(A, b);
            if (x && satisfies(*x)) verts.push_back(*x);
            return;
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    if (verts.empty()) throw std::invalid_argument("halfspace system has no vertex");
    return MonoPolyhedron(dim, std::move(verts));
}

MonoPolyhedron intersect(const MonoPolyhedron& a, const MonoPolyhedron& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    auto ha = a.to_halfspaces();
    auto hb = b.to_halfspaces();
    ha.insert(ha.end(), hb.begin(), hb.end());
    return MonoPolyhedron::from_halfspaces(a.dim_, ha);
}

nlohmann::json MonoPolyhedron::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : vertices()) {
        nlohmann::json pj = nlohmann::json::array();
        for (const auto& v : p) pj.push_back({v.get_num().get_str(), v.get_den().get_str()});
        pts.push_back(pj);
    }
    return {{"dim", dim_}, {"points", pts}};
}

MonoPolyhedron MonoPolyhedron::from_json(const nlohmann::json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& pj : j.at("points")) {
        Point p;
        for (const auto& c : pj) {
            auto part = [](const nlohmann::json& x) {
                return x.is_string() ? mpz_class(x.get<std::string>()) : mpz_class(x.get<long>());
            };
            if (c.is_array()) {
                Rational q(part(c.at(0)), part(c.at(1)));
                q.canonicalize();
                p.push_back(q);
            } else {
                p.push_back(Rational(part(c)));
            }
        }
        pts.push_back(std::move(p));
    }
    return MonoPolyhedron(dim, std::move(pts));
}

MonoPolyhedron newton_polyhedron(const std::vector<Monomial>& gens, std::size_t dim) {
    std::vector<Point> pts;
    for (const auto& m : gens) {
        Point p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = m[i];
        pts.push_back(std::move(p));
    }
    return MonoPolyhedron(dim, std::move(pts));
}

}  // namespace reglab
