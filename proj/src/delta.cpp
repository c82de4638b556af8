#include "jml/delta.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace jml {

std::vector<int> DeltaComplex::counts() const
{
    std::vector<int> out;
    for (const auto& s : simplices)
        out.push_back(static_cast<int>(s.size()));
    return out;
}

void checkDelta(const DeltaComplex& dc, const Representation& rep)
{
    auto where = [](int k, int s) { return "simplex " + std::to_string(s) + " of dimension " + std::to_string(k); };
    for (int k = 0; k <= dc.top(); ++k)
        for (int s = 0; s < dc.count(k); ++s) {
            const auto& sx = dc.simplices[k][s];
            if (static_cast<int>(sx.faces.size()) != (k == 0 ? 0 : k + 1) ||
                static_cast<int>(sx.vertices.size()) != k + 1)
                throw std::invalid_argument(where(k, s) + " has the wrong number of faces");
            for (int f : sx.faces)
                if (f < -1 || f >= dc.count(k - 1))
                    throw std::invalid_argument(where(k, s) + " references a missing face");
            if (sx.front.xi(rep) != sx.theta)
                throw std::invalid_argument(where(k, s) + ": xi of the front translate differs from theta");
            // d_i d_j = d_{j-1} d_i for i < j
            if (k >= 2)
                for (int j = 1; j <= k; ++j)
                    for (int i = 0; i < j; ++i) {
                        int a = sx.faces[j], b = sx.faces[i];
                        if (a < 0 || b < 0)
                            continue;
                        int lhs = dc.simplices[k - 1][a].faces[i];
                        int rhs = dc.simplices[k - 1][b].faces[j - 1];
                        if (lhs != rhs)
                            throw std::invalid_argument(where(k, s) + " violates a face identity");
                    }
        }
    // flatness and closedness on 2-simplices
    for (int s = 0; s < dc.count(2); ++s) {
        const auto& sx = dc.simplices[2][s];
        auto edge = [&](int j) -> std::pair<Evaluated, int> {
            int e = sx.faces[j];
            if (e < 0)
                return {Evaluated{Mat::identity(rep.n), 0}, 0};
            return {dc.simplices[1][e].front.evaluate(rep), dc.simplices[1][e].theta};
        };
        auto [g12, t12] = edge(0);
        auto [g02, t02] = edge(1);
        auto [g01, t01] = edge(2);
        if (t12 - t02 + t01 != 0)
            throw std::invalid_argument(where(2, s) + ": theta is not closed");
        if (!(g01.rho * g12.rho == g02.rho) || g01.xi + g12.xi != g02.xi)
            throw std::invalid_argument(where(2, s) + ": translates are not flat");
        Evaluated front = sx.front.evaluate(rep);
        if (!(front.rho == g01.rho))
            throw std::invalid_argument(where(2, s) + ": front translate disagrees with its front edge");
    }
}

CellData toCellData(const DeltaComplex& dc)
{
    CellData c;
    c.cells = dc.counts();
    c.boundary.resize(c.cells.size());
    for (int k = 1; k <= dc.top(); ++k)
        for (const auto& sx : dc.simplices[k]) {
            std::vector<Incidence> b;
            for (int j = 0; j <= k; ++j) {
                if (sx.faces[j] < 0)
                    continue;
                b.push_back({sx.faces[j], j % 2 == 0 ? 1L : -1L, j == 0 ? sx.front : GroupToken()});
            }
            c.boundary[k].push_back(std::move(b));
        }
    return c;
}

namespace {

using Point = std::vector<int>;
using Seq = std::vector<Point>;

/// Base complex B and domain A with the two gluing maps.
class HocoeqModel
{
public:
    virtual ~HocoeqModel() = default;

    virtual int baseDim() const = 0;
    virtual std::vector<Seq> baseSimplices(int k) const = 0;
    /// Canonical key, or nothing when the sequence is degenerate.
    virtual std::optional<std::string> baseKey(const Seq& s) const = 0;
    /// Translate along the straight path between two points of a simplex.
    virtual GroupToken basePath(const Point& p, const Point& q) const = 0;

    virtual int domDim() const = 0;
    virtual std::vector<Seq> domSimplices(int k) const = 0;
    virtual std::string domKey(const Seq& s) const = 0;
    virtual Point f(const Point& p) const = 0;
    virtual Point g(const Point& p) const = 0;
    /// Translate from f(p) up to g(p).
    virtual GroupToken vert(const Point& p) const = 0;
};

struct XVertex
{
    Point p;
    int level = -1;  // -1: a point of B; 0 / 1: bottom / top of the cylinder on A
};

class Builder
{
public:
    explicit Builder(const HocoeqModel& m) : m_(m) {}

    DeltaComplex run()
    {
        int top = std::max(m_.baseDim(), m_.domDim() + 1);
        std::vector<std::vector<std::vector<XVertex>>> all(static_cast<std::size_t>(top) + 1);
        keys_.resize(all.size());
        auto add = [&](int k, std::vector<XVertex> s) {
            std::string key = keyOf(s).value();
            if (keys_[k].count(key))
                throw std::logic_error("duplicate simplex " + key);
            keys_[k][key] = static_cast<int>(all[k].size());
            all[k].push_back(std::move(s));
        };
        for (int k = 0; k <= m_.baseDim(); ++k)
            for (const auto& s : m_.baseSimplices(k)) {
                std::vector<XVertex> xs;
                for (const auto& p : s)
                    xs.push_back({p, -1});
                add(k, std::move(xs));
            }
        for (int n = 0; n <= m_.domDim(); ++n)
            for (const auto& tau : m_.domSimplices(n)) {
                for (int i = 0; i <= n; ++i) {  // overlapping split, dimension n + 1
                    std::vector<XVertex> xs;
                    for (int j = 0; j <= i; ++j)
                        xs.push_back({tau[j], 0});
                    for (int j = i; j <= n; ++j)
                        xs.push_back({tau[j], 1});
                    add(n + 1, std::move(xs));
                }
                for (int i = 0; i < n; ++i) {  // disjoint split, dimension n
                    std::vector<XVertex> xs;
                    for (int j = 0; j <= n; ++j)
                        xs.push_back({tau[j], j <= i ? 0 : 1});
                    add(n, std::move(xs));
                }
            }

        DeltaComplex dc;
        dc.simplices.resize(all.size());
        for (int k = 0; k <= top; ++k)
            for (const auto& s : all[k]) {
                DeltaSimplex sx;
                for (int j = 0; k > 0 && j <= k; ++j) {
                    auto face = s;
                    face.erase(face.begin() + j);
                    sx.faces.push_back(lookup(k - 1, face));
                }
                for (const auto& v : s)
                    sx.vertices.push_back(lookup(0, {v}));
                if (k > 0) {
                    sx.front = edgeToken(s[0], s[1]);
                    sx.theta = edgeTheta(s[0], s[1]);
                }
                dc.simplices[k].push_back(std::move(sx));
            }
        while (!dc.simplices.empty() && dc.simplices.back().empty())
            dc.simplices.pop_back();
        return dc;
    }

private:
    Point image(const XVertex& v) const
    {
        if (v.level < 0)
            return v.p;
        return v.level == 0 ? m_.f(v.p) : m_.g(v.p);
    }

    GroupToken edgeToken(const XVertex& a, const XVertex& b) const
    {
        if (a.level == 0 && b.level == 1)
            return m_.basePath(m_.f(a.p), m_.f(b.p)) * m_.vert(b.p);
        return m_.basePath(image(a), image(b));
    }

    int edgeTheta(const XVertex& a, const XVertex& b) const { return a.level == 0 && b.level == 1 ? 1 : 0; }

    std::optional<std::string> keyOf(const std::vector<XVertex>& s) const
    {
        bool pure = true;
        int level = s.front().level;
        for (const auto& v : s)
            if (v.level != level)
                pure = false;
        if (pure) {
            Seq pts;
            for (const auto& v : s)
                pts.push_back(image(v));
            auto k = m_.baseKey(pts);
            if (!k)
                return std::nullopt;
            return "B" + *k;
        }
        Seq tau;
        int split = -1;
        bool overlap = false;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j > 0 && s[j].p == s[j - 1].p && s[j - 1].level == 0 && s[j].level == 1) {
                overlap = true;
                continue;
            }
            tau.push_back(s[j].p);
            if (s[j].level == 0)
                split = static_cast<int>(tau.size()) - 1;
        }
        return "M" + m_.domKey(tau) + "|" + std::to_string(split) + (overlap ? "o" : "d");
    }

    int lookup(int k, const std::vector<XVertex>& s) const
    {
        auto key = keyOf(s);
        if (!key)
            return -1;
        auto it = keys_[k].find(*key);
        if (it == keys_[k].end())
            throw std::logic_error("face " + *key + " of dimension " + std::to_string(k) + " is not a simplex");
        return it->second;
    }

    const HocoeqModel& m_;
    std::vector<std::unordered_map<std::string, int>> keys_;
};

int floorDiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceilDiv(int a, int b) { return -floorDiv(-a, b); }
int mod(int a, int b) { return a - b * floorDiv(a, b); }

/// Ordered partitions of a subset of {0..d-1} into k nonempty blocks, as 0/1 steps.
std::vector<std::vector<Point>> monotoneSteps(int d, int k)
{
    std::vector<std::vector<Point>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> label(static_cast<std::size_t>(d), 0);
    std::function<void(int)> rec = [&](int c) {
        if (c == d) {
            std::vector<Point> steps(static_cast<std::size_t>(k), Point(static_cast<std::size_t>(d), 0));
            std::vector<int> used(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < d; ++i)
                if (label[i] > 0) {
                    steps[label[i] - 1][i] = 1;
                    used[label[i] - 1] = 1;
                }
            if (std::all_of(used.begin(), used.end(), [](int x) { return x; }))
                out.push_back(std::move(steps));
            return;
        }
        for (int l = 0; l <= k; ++l) {
            label[c] = l;
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Seq> latticeSimplices(int d, int period, int k)
{
    std::vector<Seq> out;
    int total = 1;
    for (int i = 0; i < d; ++i)
        total *= period;
    auto steps = monotoneSteps(d, k);
    for (int idx = 0; idx < total; ++idx) {
        Point base(static_cast<std::size_t>(d));
        int r = idx;
        for (int i = d - 1; i >= 0; --i) {
            base[i] = r % period;
            r /= period;
        }
        for (const auto& st : steps) {
            Seq s{base};
            for (const auto& step : st) {
                Point next = s.back();
                for (int i = 0; i < d; ++i)
                    next[i] += step[i];
                s.push_back(std::move(next));
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::optional<std::string> latticeKey(const Seq& s, int period)
{
    std::ostringstream os;
    const Point& p0 = s.front();
    for (int x : p0)
        os << mod(x, period) << ',';
    bool degenerate = false;
    for (std::size_t j = 1; j < s.size(); ++j) {
        os << ';';
        bool zero = true;
        for (std::size_t i = 0; i < p0.size(); ++i) {
            int step = s[j][i] - s[j - 1][i];
            int total = s[j][i] - p0[i];
            if (step < 0 || step > 1 || total > 1)
                throw std::logic_error("lattice sequence is not monotone");
            zero = zero && step == 0;
            os << step;
        }
        degenerate = degenerate || zero;
    }
    if (degenerate)
        return std::nullopt;
    return os.str();
}

class LatticeModel : public HocoeqModel
{
public:
    LatticeModel(const LatticeSpec& spec, const Representation& rep) : s_(spec)
    {
        if (spec.d < 0 || spec.N < 1 || spec.m < 1)
            throw std::invalid_argument("lattice needs d >= 0, N >= 1, m >= 1");
        if (static_cast<int>(spec.S.size()) != spec.d || static_cast<int>(spec.generators.size()) != spec.d)
            throw std::invalid_argument("lattice matrix and generators must match the dimension");
        for (const auto& row : spec.S) {
            if (static_cast<int>(row.size()) != spec.d)
                throw std::invalid_argument("lattice matrix must be square");
            int sum = 0;
            for (int x : row) {
                if (x < 0)
                    throw std::invalid_argument("lattice matrix entries must be nonnegative");
                sum += x;
            }
            if (sum > spec.m)
                throw std::invalid_argument("subdivision m = " + std::to_string(spec.m) +
                                            " is smaller than a row sum of the lattice matrix");
        }
        shift_ = spec.shift.empty() ? Point(static_cast<std::size_t>(spec.d), 0) : spec.shift;
        if (static_cast<int>(shift_.size()) != spec.d)
            throw std::invalid_argument("shift must match the dimension");
        for (const auto& name : spec.generators) {
            int g = rep.index(name);
            if (g < 0)
                throw std::invalid_argument("undeclared generator '" + name + "'");
            gens_.push_back(g);
        }
        int u = rep.index(spec.u);
        if (u < 0)
            throw std::invalid_argument("undeclared generator '" + spec.u + "'");
        u_ = GroupToken::generator(u);
    }

    int baseDim() const override { return s_.d; }
    std::vector<Seq> baseSimplices(int k) const override { return latticeSimplices(s_.d, s_.N, k); }
    std::optional<std::string> baseKey(const Seq& s) const override { return latticeKey(s, s_.N); }
    GroupToken basePath(const Point& p, const Point& q) const override { return position(p).inverse() * position(q); }

    int domDim() const override { return s_.d; }
    std::vector<Seq> domSimplices(int k) const override { return latticeSimplices(s_.d, s_.m * s_.N, k); }
    std::string domKey(const Seq& s) const override
    {
        auto k = latticeKey(s, s_.m * s_.N);
        if (!k)
            throw std::logic_error("degenerate domain simplex");
        return *k;
    }
    Point f(const Point& p) const override
    {
        Point out(static_cast<std::size_t>(s_.d));
        for (int i = 0; i < s_.d; ++i) {
            int acc = 0;
            for (int j = 0; j < s_.d; ++j)
                acc += s_.S[i][j] * p[j];
            out[i] = ceilDiv(acc, s_.m) + shift_[i];
        }
        return out;
    }
    Point g(const Point& p) const override
    {
        Point out(static_cast<std::size_t>(s_.d));
        for (int i = 0; i < s_.d; ++i)
            out[i] = ceilDiv(p[i], s_.m);
        return out;
    }
    GroupToken vert(const Point& p) const override { return position(f(p)).inverse() * u_ * position(g(p)); }

private:
    GroupToken position(const Point& p) const
    {
        GroupToken t;
        for (int i = 0; i < s_.d; ++i)
            t = t * GroupToken::generator(gens_[i], floorDiv(p[i], s_.N));
        return t;
    }

    LatticeSpec s_;
    Point shift_;
    std::vector<int> gens_;
    GroupToken u_;
};

std::string joinInts(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += std::to_string(x) + ",";
    return s;
}

class SimplicialModel : public HocoeqModel
{
public:
    SimplicialModel(const SimplicialSpec& spec, const Representation& rep) : s_(spec)
    {
        if (static_cast<int>(spec.phi.size()) != spec.vertices || static_cast<int>(spec.vert.size()) != spec.vertices)
            throw std::invalid_argument("phi and vertical translates must be given for every vertex");
        std::set<std::vector<int>> closed;
        for (auto s : spec.simplices) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.empty())
                throw std::invalid_argument("simplex {" + joinInts(s) + "} repeats a vertex");
            for (int v : s)
                if (v < 0 || v >= spec.vertices)
                    throw std::invalid_argument("simplex {" + joinInts(s) + "} uses an unknown vertex");
            int n = static_cast<int>(s.size());
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> face;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i))
                        face.push_back(s[i]);
                closed.insert(face);
            }
        }
        for (int v = 0; v < spec.vertices; ++v)
            closed.insert({v});
        for (const auto& s : closed) {
            int k = static_cast<int>(s.size()) - 1;
            if (static_cast<int>(byDim_.size()) <= k)
                byDim_.resize(static_cast<std::size_t>(k) + 1);
            byDim_[k].push_back(s);
        }
        for (const auto& s : closed)
            if (s.size() == 2) {
                auto it = spec.edgeTokens.find({s[0], s[1]});
                edgeTok_[{s[0], s[1]}] = it == spec.edgeTokens.end() ? GroupToken() : GroupToken::parse(it->second, rep);
            }
        for (const auto& w : spec.vert)
            vert_.push_back(GroupToken::parse(w, rep));
        for (int v : spec.phi)
            if (v < 0 || v >= spec.vertices)
                throw std::invalid_argument("phi sends a vertex outside the complex");
        for (const auto& s : closed) {
            std::vector<int> img;
            for (int v : s)
                img.push_back(spec.phi[v]);
            std::vector<int> sortedImg = img;
            std::sort(sortedImg.begin(), sortedImg.end());
            sortedImg.erase(std::unique(sortedImg.begin(), sortedImg.end()), sortedImg.end());
            if (!closed.count(sortedImg))
                throw std::invalid_argument("phi is not simplicial on {" + joinInts(s) + "}");
            if (!spec.subdivide && !std::is_sorted(img.begin(), img.end()))
                throw std::invalid_argument("phi is not order-compatible on {" + joinInts(s) +
                                            "}; subdivide first");
        }
        if (spec.subdivide) {
            // vertices of the subdivision are simplices of M, ordered by (dimension, index)
            for (const auto& level : byDim_)
                for (const auto& s : level)
                    sdVertices_.push_back(s);
        }
    }

    int baseDim() const override { return static_cast<int>(byDim_.size()) - 1; }
    std::vector<Seq> baseSimplices(int k) const override
    {
        std::vector<Seq> out;
        if (k < static_cast<int>(byDim_.size()))
            for (const auto& s : byDim_[k]) {
                Seq seq;
                for (int v : s)
                    seq.push_back({v});
                out.push_back(std::move(seq));
            }
        return out;
    }
    std::optional<std::string> baseKey(const Seq& s) const override
    {
        std::string key;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j > 0 && s[j][0] == s[j - 1][0])
                return std::nullopt;
            if (j > 0 && s[j][0] < s[j - 1][0])
                throw std::logic_error("decreasing vertex sequence");
            key += std::to_string(s[j][0]) + ",";
        }
        return key;
    }
    GroupToken basePath(const Point& p, const Point& q) const override
    {
        if (p[0] == q[0])
            return {};
        if (p[0] < q[0])
            return edgeTok_.at({p[0], q[0]});
        return edgeTok_.at({q[0], p[0]}).inverse();
    }

    int domDim() const override { return baseDim(); }
    std::vector<Seq> domSimplices(int k) const override
    {
        if (!s_.subdivide)
            return baseSimplices(k);
        // chains of simplices of strictly increasing dimension, each a face of the next
        std::vector<Seq> out;
        Seq cur;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == k + 1) {
                out.push_back(cur);
                return;
            }
            for (int v = start; v < static_cast<int>(sdVertices_.size()); ++v) {
                if (!cur.empty() && !isFace(sdVertices_[cur.back()[0]], sdVertices_[v]))
                    continue;
                cur.push_back({v});
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    }
    std::string domKey(const Seq& s) const override
    {
        std::string key;
        for (const auto& p : s)
            key += std::to_string(p[0]) + ",";
        return key;
    }
    Point f(const Point& p) const override
    {
        if (!s_.subdivide)
            return {s_.phi[p[0]]};
        int best = -1;
        for (int v : sdVertices_[p[0]])
            best = std::max(best, s_.phi[v]);
        return {best};
    }
    Point g(const Point& p) const override
    {
        if (!s_.subdivide)
            return p;
        return {sdVertices_[p[0]].back()};
    }
    GroupToken vert(const Point& p) const override
    {
        if (!s_.subdivide)
            return vert_[p[0]];
        const auto& simplex = sdVertices_[p[0]];
        int top = f(p)[0];
        for (int v : simplex)
            if (s_.phi[v] == top)
                return vert_[v] * basePath({v}, {simplex.back()});
        throw std::logic_error("no vertex attains the image maximum");
    }

private:
    static bool isFace(const std::vector<int>& a, const std::vector<int>& b)
    {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    SimplicialSpec s_;
    std::vector<std::vector<std::vector<int>>> byDim_;
    std::map<std::pair<int, int>, GroupToken> edgeTok_;
    std::vector<GroupToken> vert_;
    std::vector<std::vector<int>> sdVertices_;
};

}  // namespace

DeltaComplex latticeTorus(const LatticeSpec& spec, const Representation& rep)
{
    LatticeModel model(spec, rep);
    DeltaComplex dc = Builder(model).run();
    checkDelta(dc, rep);
    return dc;
}

DeltaComplex simplicialTorus(const SimplicialSpec& spec, const Representation& rep)
{
    SimplicialModel model(spec, rep);
    DeltaComplex dc = Builder(model).run();
    checkDelta(dc, rep);
    return dc;
}

}  // namespace jml
