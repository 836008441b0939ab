#include "seshadri/estimator.hpp"

#include "seshadri/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace seshadri {

BoundValue BoundValue::rational(const Rational& v) {
    return BoundValue{Kind::Rational, v, 1};
}

BoundValue BoundValue::root(const Rational& radicand, unsigned long index) {
    require(index >= 1, ErrorCode::InvalidArgument, "root index must be positive");
    require(radicand >= 0, ErrorCode::InvalidArgument, "negative radicand");
    if (index == 1)
        return rational(radicand);
    Integer num, den;
    if (mpz_root(num.get_mpz_t(), radicand.get_num_mpz_t(), index) != 0 &&
        mpz_root(den.get_mpz_t(), radicand.get_den_mpz_t(), index) != 0)
        return rational(make_rational(num, den));
    return BoundValue{Kind::NthRoot, radicand, index};
}

int compare(const Rational& a, const BoundValue& b) {
    if (b.kind == BoundValue::Kind::Rational)
        return cmp(a, b.value) < 0 ? -1 : (a == b.value ? 0 : 1);
    if (a < 0)
        return -1;
    Rational lhs = pow(a, b.index);
    return lhs < b.value ? -1 : (lhs == b.value ? 0 : 1);
}

int compare(const BoundValue& a, const BoundValue& b) {
    if (a.kind == BoundValue::Kind::Rational)
        return compare(a.value, b);
    if (b.kind == BoundValue::Kind::Rational)
        return -compare(b.value, a);
    Rational lhs = pow(a.value, b.index);
    Rational rhs = pow(b.value, a.index);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

std::string to_string(const BoundValue& v) {
    if (v.kind == BoundValue::Kind::Rational)
        return to_string(v.value);
    std::string base = to_string(v.value);
    if (v.value.get_den() != 1)
        base = "(" + base + ")";
    return base + "^(1/" + std::to_string(v.index) + ")";
}

Rational Certificate::value() const {
    return std::visit(
        [](const auto& n) -> Rational {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BaseSegment>)
                return n.length;
            else if constexpr (std::is_same_v<T, Projection>)
                return std::min(n.width, n.child->value());
            else
                return n.value;
        },
        node);
}

CertificatePtr make_base(const Rational& length) {
    return std::make_shared<const Certificate>(Certificate{BaseSegment{length}});
}

CertificatePtr make_projection(Functional w, Rational t, Rational width, CertificatePtr child) {
    require(child != nullptr, ErrorCode::InvalidArgument, "projection certificate without child");
    return std::make_shared<const Certificate>(
        Certificate{Projection{std::move(w), std::move(t), std::move(width), std::move(child)}});
}

CertificatePtr make_simplex(std::vector<Rational> a, Rational value) {
    return std::make_shared<const Certificate>(Certificate{SimplexClosedForm{std::move(a), std::move(value)}});
}

SearchStrategy SearchStrategy::defaults_for_rank(std::size_t rank) {
    SearchStrategy s;
    if (rank >= 4)
        s.source = Source::FacetNormals;
    return s;
}

namespace {

Functional sign_normalized(Functional w) {
    auto it = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (it != w.end() && *it < 0)
        for (auto& x : w)
            x = -x;
    return w;
}

void box_vectors(std::size_t n, int h, std::vector<Functional>& out) {
    Functional v(n, Integer(-h));
    while (true) {
        if (!is_zero(v) && is_primitive(v)) {
            Functional s = sign_normalized(v);
            if (s == v)
                out.push_back(v);
        }
        std::size_t k = 0;
        while (k < n && v[k] == h) {
            v[k] = -h;
            ++k;
        }
        if (k == n)
            break;
        ++v[k];
    }
}

} // namespace

std::vector<Functional> candidate_projections(const LatticePolytope& p, const SearchStrategy& strategy) {
    require(p.rank() >= 1 && p.full_dimensional(), ErrorCode::InvalidArgument, "polytope not full-dimensional");
    std::vector<Functional> out;
    for (const auto& f : p.faces())
        if (f.dim == p.dim() - 1)
            out.push_back(sign_normalized(primitive_part(f.support)));
    if (strategy.source == SearchStrategy::Source::FacetNormalsPlusBox) {
        require(strategy.box_height >= 1, ErrorCode::InvalidArgument, "box height must be at least 1");
        box_vectors(p.rank(), strategy.box_height, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> candidate_slice_params(const LatticePolytope& p, std::span<const Integer> w) {
    return candidate_slice_params(p, kernel_splitting(w));
}

std::vector<Rational> candidate_slice_params(const LatticePolytope& p, const KernelSplitting& split) {
    if (p.dim() <= 1)
        return {};
    std::vector<Rational> values;
    for (const auto& v : p.vertices())
        values.push_back(dot(split.functional, v));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // Vertex values and consecutive midpoints. The image endpoints stay when
    // the slice there is still a facet: 4Δ³ only reaches 4 through its base.
    std::vector<Rational> ts;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            ts.push_back((values[i - 1] + values[i]) / 2);
        ts.push_back(values[i]);
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool interior = i != 0 && i + 1 != ts.size();
        if (interior && p.full_dimensional()) {
            out.push_back(ts[i]);
            continue;
        }
        if (!slice(p, split, ts[i]).degenerate)
            out.push_back(ts[i]);
    }
    return out;
}

namespace {

struct Candidate {
    Rational value;
    Rational t;
    CertificatePtr child;
};

class Search {
public:
    Search(const SearchStrategy& strategy, int max_depth) : strategy_(strategy), max_depth_(max_depth) {}

    BoundReport run(const LatticePolytope& p, int depth) {
        if (!strategy_.memoize)
            return compute(p, depth);
        const RationalPoint shift = p.vertex(0);
        std::vector<RationalPoint> key_vertices;
        key_vertices.reserve(p.vertex_count());
        for (const auto& v : p.vertices())
            key_vertices.push_back(subtract(v, shift));
        const Key key{std::max(0, max_depth_ - depth + 1), std::move(key_vertices)};
        {
            std::lock_guard lock(memo_mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return shifted(it->second, shift);
        }
        RationalPoint back(shift.size());
        for (std::size_t i = 0; i < shift.size(); ++i)
            back[i] = -shift[i];
        BoundReport r = compute(translate(p, back), depth);
        {
            std::lock_guard lock(memo_mutex_);
            memo_.emplace(key, r);
        }
        return shifted(r, shift);
    }

private:
    using Key = std::pair<int, std::vector<RationalPoint>>;

    static BoundReport shifted(const BoundReport& r, const RationalPoint& shift) {
        if (is_zero(shift))
            return r;
        BoundReport out = r;
        out.lower_cert = transform_certificate(r.lower_cert, IntMatrix::identity(shift.size()), shift);
        return out;
    }

    BoundReport compute(const LatticePolytope& p, int depth) {
        BoundReport report;
        if (p.rank() == 1) {
            Rational len = lattice_length(p);
            report.lower = len;
            report.lower_cert = make_base(len);
            report.upper = BoundValue::rational(len);
            report.upper_witness = {UpperWitness::Kind::Width, Functional{Integer(1)}, {}};
            report.exact = true;
            return report;
        }

        const std::vector<Functional> cands = candidate_projections(p, strategy_);
        std::vector<Rational> widths;
        widths.reserve(cands.size());
        std::size_t narrowest = 0;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            widths.push_back(functional_image(p, cands[i]).length());
            if (widths[i] < widths[narrowest])
                narrowest = i;
        }
        Rational volume = normalized_volume(p);
        BoundValue root = BoundValue::root(volume, p.rank());
        if (compare(root, BoundValue::rational(widths[narrowest])) < 0) {
            report.upper = root;
            report.upper_witness = {UpperWitness::Kind::Volume, {}, volume};
        } else {
            report.upper = BoundValue::rational(widths[narrowest]);
            report.upper_witness = {UpperWitness::Kind::Width, cands[narrowest], {}};
        }

        const bool greedy = depth > max_depth_;
        std::optional<Candidate> best;
        std::size_t best_index = 0;
        if (depth == 1 && strategy_.threads > 1 && !greedy && cands.size() > 1) {
            std::tie(best, best_index) = parallel_best(p, cands, widths, report.upper, depth);
        } else {
            for (std::size_t i = 0; i < cands.size(); ++i) {
                if (best && widths[i] <= best->value)
                    continue;
                auto c = best_for(p, cands[i], widths[i], depth, greedy);
                if (c && (!best || c->value > best->value)) {
                    best = std::move(c);
                    best_index = i;
                }
                if (greedy || (best && compare(best->value, report.upper) == 0))
                    break;
            }
        }
        require(best.has_value(), ErrorCode::InvalidArgument, "no projection candidate");
        report.lower = best->value;
        report.lower_cert = make_projection(cands[best_index], best->t, widths[best_index], best->child);
        report.exact = compare(report.lower, report.upper) == 0;
        return report;
    }

    std::optional<Candidate> best_for(const LatticePolytope& p, const Functional& w, const Rational& width, int depth,
                                      bool greedy) {
        KernelSplitting split = kernel_splitting(w);
        std::optional<Candidate> best;
        for (const auto& t : candidate_slice_params(p, split)) {
            Slice s = slice(p, split, t);
            BoundReport child = run(s.polytope, depth + 1);
            Rational v = std::min(width, child.lower);
            if (!best || v > best->value)
                best = Candidate{v, t, child.lower_cert};
            if (greedy || v == width)
                break;
        }
        return best;
    }

    // Top-level candidates in parallel. A task is skipped only when it can
    // neither beat the best value found so far nor tie it from an earlier
    // position, so the reduction matches the sequential order.
    std::pair<std::optional<Candidate>, std::size_t> parallel_best(const LatticePolytope& p,
                                                                   const std::vector<Functional>& cands,
                                                                   const std::vector<Rational>& widths,
                                                                   const BoundValue& upper, int depth) {
        std::vector<std::optional<Candidate>> results(cands.size());
        std::mutex mutex;
        std::optional<Rational> shared_best;
        std::size_t shared_index = 0;
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;

        auto worker = [&] {
            try {
                for (std::size_t i = next++; i < cands.size(); i = next++) {
                    {
                        std::lock_guard lock(mutex);
                        if (error)
                            return;
                        if (shared_best && (widths[i] < *shared_best || (widths[i] <= *shared_best && i > shared_index)))
                            continue;
                        if (shared_best && compare(*shared_best, upper) == 0 && i > shared_index)
                            continue;
                    }
                    auto c = best_for(p, cands[i], widths[i], depth, false);
                    std::lock_guard lock(mutex);
                    if (c && (!shared_best || c->value > *shared_best || (c->value == *shared_best && i < shared_index))) {
                        shared_best = c->value;
                        shared_index = i;
                    }
                    results[i] = std::move(c);
                }
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error)
                    error = std::current_exception();
            }
        };
        const unsigned n = std::min<unsigned>(strategy_.threads, static_cast<unsigned>(cands.size()));
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);

        std::optional<Candidate> best;
        std::size_t index = 0;
        for (std::size_t i = 0; i < results.size(); ++i)
            if (results[i] && (!best || results[i]->value > best->value)) {
                best = results[i];
                index = i;
            }
        return {best, index};
    }

    const SearchStrategy& strategy_;
    int max_depth_;
    std::mutex memo_mutex_;
    std::map<Key, BoundReport> memo_;
};

} // namespace

BoundReport estimate_interior(const LatticePolytope& p, const SearchStrategy& strategy) {
    require(p.rank() >= 1 && p.full_dimensional(), ErrorCode::InvalidArgument, "polytope not full-dimensional");
    require(strategy.max_depth >= 0, ErrorCode::InvalidArgument, "max depth must be positive");
    Search search(strategy, strategy.max_depth == 0 ? p.dim() : strategy.max_depth);
    return search.run(p, 1);
}

Rational simplex_lower_bound(std::span<const Rational> a) {
    require(!a.empty(), ErrorCode::InvalidArgument, "empty simplex parameter list");
    for (const auto& x : a)
        require(x >= 0, ErrorCode::InvalidArgument, "simplex parameters must be nonnegative");
    // suffix[i] = a_i + ... + a_n + 1
    std::vector<Rational> suffix(a.size() + 1, Rational(1));
    for (std::size_t i = a.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + a[i];
    Rational best = suffix[0] / suffix[1];
    for (std::size_t i = 1; i < a.size(); ++i)
        best = std::min(best, Rational(suffix[i] / suffix[i + 1]));
    return best;
}

LatticePolytope simplex_polytope(std::span<const Rational> a) {
    const std::size_t n = a.size();
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
        RationalPoint e(n, Rational(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    RationalPoint last(n);
    for (std::size_t i = 0; i < n; ++i)
        last[i] = -a[i];
    pts.push_back(std::move(last));
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

Rational verify_certificate(const LatticePolytope& p, const Certificate& cert) {
    return std::visit(
        [&](const auto& n) -> Rational {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BaseSegment>) {
                require(p.rank() == 1 && p.dim() == 1, ErrorCode::DimensionMismatch,
                        "base certificate needs a segment in rank 1");
                Rational len = lattice_length(p);
                if (len != n.length)
                    fail(ErrorCode::ValueMismatch,
                         "base length " + to_string(n.length) + " but segment has length " + to_string(len));
                return len;
            } else if constexpr (std::is_same_v<T, Projection>) {
                require(p.rank() >= 2 && n.w.size() == p.rank(), ErrorCode::DimensionMismatch,
                        "projection does not match polytope rank");
                require(p.full_dimensional(), ErrorCode::DimensionMismatch, "polytope not full-dimensional");
                require(n.child != nullptr, ErrorCode::InvalidArgument, "projection certificate without child");
                require(!is_zero(n.w) && is_primitive(n.w), ErrorCode::InvalidArgument, "functional must be primitive");
                Rational width = functional_image(p, n.w).length();
                if (width != n.width)
                    fail(ErrorCode::ValueMismatch,
                         "stored width " + to_string(n.width) + " but projection has width " + to_string(width));
                Slice s = slice(p, n.w, n.t);
                if (s.degenerate)
                    fail(ErrorCode::DegenerateSlice, "slice at t = " + to_string(n.t) + " is degenerate");
                return std::min(width, verify_certificate(s.polytope, *n.child));
            } else {
                require(n.a.size() == p.rank(), ErrorCode::DimensionMismatch, "simplex parameters do not match rank");
                if (!(simplex_polytope(n.a) == p))
                    fail(ErrorCode::ValueMismatch, "polytope is not the simplex of the certificate");
                Rational v = simplex_lower_bound(n.a);
                if (v != n.value)
                    fail(ErrorCode::ValueMismatch,
                         "stored value " + to_string(n.value) + " but closed form gives " + to_string(v));
                return v;
            }
        },
        cert.node);
}

CertificatePtr transform_certificate(const CertificatePtr& cert, const IntMatrix& u, std::span<const Rational> shift) {
    require(cert != nullptr, ErrorCode::InvalidArgument, "null certificate");
    require(u.rows() == u.cols() && u.rows() == shift.size(), ErrorCode::DimensionMismatch,
            "transform size mismatch");
    if (const auto* proj = std::get_if<Projection>(&cert->node)) {
        const std::size_t n = u.rows();
        require(proj->w.size() == n, ErrorCode::DimensionMismatch, "projection does not match transform rank");
        IntMatrix inv = unimodular_inverse(u);
        Functional w2(n, Integer(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                w2[j] += proj->w[i] * inv(i, j);
        Rational t2 = proj->t + dot(w2, shift);
        if (n == 1)
            return make_projection(w2, t2, proj->width, proj->child);

        KernelSplitting from = kernel_splitting(proj->w);
        KernelSplitting to = kernel_splitting(w2);
        IntMatrix t_matrix(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) {
            RationalPoint c = to.kernel_coordinates(to_rational(u.apply(std::span<const Integer>(from.kernel_basis[i]))));
            for (std::size_t j = 0; j < n - 1; ++j)
                t_matrix(i, j) = c[j].get_num();
        }
        RationalPoint image_section = to_rational(u.apply(std::span<const Integer>(from.section)));
        RationalPoint offset = add(scale(image_section, proj->t), shift);
        offset = subtract(offset, scale(to_rational(to.section), t2));
        RationalPoint child_shift = to.kernel_coordinates(offset);
        return make_projection(w2, t2, proj->width,
                               transform_certificate(proj->child, t_matrix.transpose(), child_shift));
    }
    if (std::holds_alternative<SimplexClosedForm>(cert->node)) {
        bool trivial = u == IntMatrix::identity(u.rows()) && is_zero(shift);
        require(trivial, ErrorCode::Unsupported, "closed-form simplex certificates cannot be transformed");
    }
    return cert;
}

} // namespace seshadri
