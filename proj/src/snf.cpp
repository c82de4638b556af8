#include "jml/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace jml {

std::vector<Poly> SnfResult::factors() const
{
    std::vector<Poly> out;
    for (int k = 0; k < rank; ++k)
        out.push_back(D(k, k));
    return out;
}

std::vector<Poly> LaurentSnf::nonUnits() const
{
    std::vector<Poly> out;
    for (const auto& f : factors)
        if (f.degree() > 0)
            out.push_back(f);
    return out;
}

namespace {

void swapRows(PolyMat& m, int a, int b)
{
    if (a == b)
        return;
    for (int c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

void swapCols(PolyMat& m, int a, int b)
{
    if (a == b)
        return;
    for (int r = 0; r < m.rows(); ++r)
        std::swap(m(r, a), m(r, b));
}

// row_dst += f * row_src
void addRow(PolyMat& m, int dst, int src, const Poly& f)
{
    for (int c = 0; c < m.cols(); ++c)
        if (!m(src, c).isZero())
            m(dst, c) += f * m(src, c);
}

void addCol(PolyMat& m, int dst, int src, const Poly& f)
{
    for (int r = 0; r < m.rows(); ++r)
        if (!m(r, src).isZero())
            m(r, dst) += f * m(r, src);
}

}  // namespace

SnfResult snfOverPoly(const PolyMat& a)
{
    SnfResult s;
    s.D = a;
    s.U = PolyMat::identity(a.rows());
    s.V = PolyMat::identity(a.cols());
    PolyMat& D = s.D;
    const int m = a.rows(), n = a.cols();

    int t = 0;
    while (t < std::min(m, n)) {
        bool settled = false;
        bool found = true;
        while (!settled) {
            int pr = -1, pc = -1;
            for (int r = t; r < m; ++r)
                for (int c = t; c < n; ++c)
                    if (!D(r, c).isZero() && (pr < 0 || D(r, c).degree() < D(pr, pc).degree())) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) {
                found = false;
                break;
            }
            swapRows(D, t, pr);
            swapRows(s.U, t, pr);
            swapCols(D, t, pc);
            swapCols(s.V, t, pc);

            bool remainder = false;
            for (int r = t + 1; r < m; ++r) {
                if (D(r, t).isZero())
                    continue;
                Poly q, rem;
                D(r, t).divmod(D(t, t), q, rem);
                addRow(D, r, t, -q);
                addRow(s.U, r, t, -q);
                remainder = remainder || !rem.isZero();
            }
            for (int c = t + 1; c < n; ++c) {
                if (D(t, c).isZero())
                    continue;
                Poly q, rem;
                D(t, c).divmod(D(t, t), q, rem);
                addCol(D, c, t, -q);
                addCol(s.V, c, t, -q);
                remainder = remainder || !rem.isZero();
            }
            if (remainder)
                continue;

            int bad = -1;
            for (int r = t + 1; r < m && bad < 0; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (!D(r, c).divisibleBy(D(t, t))) {
                        bad = r;
                        break;
                    }
            if (bad >= 0) {
                addRow(D, t, bad, Poly(1));
                addRow(s.U, t, bad, Poly(1));
                continue;
            }
            settled = true;
        }
        if (!found)
            break;
        Scalar inv = D(t, t).lead().inverse();
        if (!inv.isOne()) {
            D(t, t) *= inv;
            for (int c = 0; c < m; ++c)
                s.U(t, c) *= inv;
        }
        ++t;
    }
    s.rank = t;
    return s;
}

LaurentSnf snfOverLaurent(const LaurentMat& a)
{
    LaurentSnf out;
    PolyMat p(a.rows(), a.cols());
    out.columnShift.assign(static_cast<std::size_t>(a.cols()), 0);
    for (int c = 0; c < a.cols(); ++c) {
        bool any = false;
        int low = 0;
        for (int r = 0; r < a.rows(); ++r)
            if (!a(r, c).isZero()) {
                low = any ? std::min(low, a(r, c).lowExponent()) : a(r, c).lowExponent();
                any = true;
            }
        out.columnShift[c] = -low;
        for (int r = 0; r < a.rows(); ++r)
            p(r, c) = a(r, c).toPoly(-low);
    }
    SnfResult s = snfOverPoly(p);
    out.rank = s.rank;
    for (const auto& f : s.factors())
        out.factors.push_back(f.stripT().monic());
    return out;
}

int multiplicityOf(const Poly& p, const Poly& q)
{
    if (p.isZero() || q.degree() <= 0)
        throw std::invalid_argument("multiplicity needs nonzero p and nonconstant q");
    int k = 0;
    Poly cur = p;
    while (true) {
        Poly quo, rem;
        cur.divmod(q, quo, rem);
        if (!rem.isZero())
            return k;
        cur = std::move(quo);
        ++k;
    }
}

std::vector<Poly> squarefreeDecomposition(const Poly& f)
{
    std::vector<Poly> out;
    if (f.degree() <= 0)
        return out;
    Poly df = f.derivative();
    Poly a0 = gcd(f, df);
    Poly b = f / a0;
    Poly c = df / a0;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        out.push_back(a);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

namespace {

void refine(std::vector<Poly>& classes, Poly p)
{
    std::vector<Poly> next;
    for (auto& q : classes) {
        if (p.degree() <= 0) {
            next.push_back(q);
            continue;
        }
        Poly g = gcd(q, p);
        if (g.degree() <= 0) {
            next.push_back(q);
            continue;
        }
        next.push_back(g);
        Poly rest = q / g;
        if (rest.degree() > 0)
            next.push_back(rest.monic());
        p = p / g;
    }
    if (p.degree() > 0)
        next.push_back(p.monic());
    classes = std::move(next);
}

bool classLess(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.str() < b.str();
}

}  // namespace

std::vector<RootClass> rootClasses(const std::vector<Poly>& factors)
{
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].isZero())
            throw std::invalid_argument("zero invariant factor");
        if (k + 1 < factors.size() && !factors[k + 1].divisibleBy(factors[k]))
            throw std::invalid_argument("factors do not form a divisibility chain at position " + std::to_string(k));
    }
    std::vector<Poly> classes;
    for (const auto& f : factors)
        for (const auto& part : squarefreeDecomposition(f))
            if (part.degree() > 0)
                refine(classes, part.monic());
    std::sort(classes.begin(), classes.end(), classLess);
    std::vector<RootClass> out;
    for (const auto& q : classes) {
        RootClass rc{q, {}};
        for (const auto& f : factors)
            rc.multiplicities.push_back(multiplicityOf(f, q));
        out.push_back(std::move(rc));
    }
    return out;
}

std::vector<int> multiplicityAt(const std::vector<Poly>& factors, const Scalar& lambda)
{
    std::vector<int> out;
    Poly lin = Poly::linear(lambda);
    for (const auto& f : factors) {
        if (f.isZero())
            continue;
        int k = multiplicityOf(f, lin);
        if (k > 0)
            out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyMat characteristicMatrix(const Matrix<Scalar>& a)
{
    PolyMat m(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m(r, c) = Poly(-a(r, c)) + (r == c ? Poly::t() : Poly());
    return m;
}

}  // namespace jml
