#include "seshadri/degeneration.hpp"

#include "seshadri/error.hpp"
#include "seshadri/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace seshadri {

void validate(const CIDescriptor& desc) {
    require(desc.n >= 1, ErrorCode::InvalidArgument, "dimension must be at least 1");
    require(!desc.degrees.empty(), ErrorCode::InvalidArgument, "at least one degree is required");
    for (const auto& d : desc.degrees)
        require(d >= 1, ErrorCode::InvalidArgument, "degrees must be positive");
}

ToricBound ci_toric_lower_bound(const CIDescriptor& desc, const ExponentMatrix& e) {
    validate(desc);
    const std::size_t n = desc.n;
    const std::size_t k = desc.degrees.size();
    require(e.size() == n, ErrorCode::DimensionMismatch, "exponent matrix needs one row per coordinate");
    for (const auto& row : e) {
        require(row.size() == k, ErrorCode::DimensionMismatch, "exponent matrix needs one column per degree");
        for (const auto& x : row)
            require(x >= 0, ErrorCode::InvalidArgument, "exponents must be nonnegative");
    }
    for (std::size_t j = 0; j < k; ++j) {
        Integer sum = 1;
        for (std::size_t i = 0; i < n; ++i)
            sum += e[i][j];
        if (sum != desc.degrees[j])
            fail(ErrorCode::InvalidArgument, "column " + std::to_string(j + 1) + " of the exponent matrix sums to " +
                                                 to_string(Integer(sum - 1)) + ", expected " +
                                                 to_string(Integer(desc.degrees[j] - 1)));
    }

    // tail[j] = d_{j+1} ... d_k
    std::vector<Integer> tail(k, Integer(1));
    for (std::size_t j = k - 1; j-- > 0;)
        tail[j] = tail[j + 1] * desc.degrees[j + 1];

    ToricBound out;
    out.a.assign(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.a[i] += e[i][j] * tail[j];
    out.b.assign(n, Integer(0));
    Integer running = 1;
    for (std::size_t i = n; i-- > 0;) {
        running += out.a[i];
        out.b[i] = running;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Integer next = i + 1 < n ? out.b[i + 1] : Integer(1);
        Rational r = make_rational(out.b[i], next);
        if (i == 0 || r < out.bound)
            out.bound = r;
    }
    return out;
}

CanonicalExponents canonical_exponents(const CIDescriptor& desc, const Integer& c, std::span<const unsigned> l) {
    validate(desc);
    require(c >= 1, ErrorCode::InvalidArgument, "c must be positive");
    require(l.size() == desc.degrees.size(), ErrorCode::DimensionMismatch, "need one block length per degree");
    require(std::accumulate(l.begin(), l.end(), 0u) == desc.n, ErrorCode::InvalidArgument,
            "block lengths must sum to the dimension");
    CanonicalExponents out;
    out.reduced.n = desc.n;
    for (std::size_t j = 0; j < l.size(); ++j) {
        Integer dj = pow(c, l[j]);
        require(desc.degrees[j] >= dj, ErrorCode::InvalidArgument, "degree smaller than c^l");
        out.reduced.degrees.push_back(dj);
    }
    out.exponents.assign(desc.n, std::vector<Integer>(l.size(), Integer(0)));
    unsigned h_prev = 0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        unsigned h = h_prev + l[j];
        for (unsigned i = h_prev + 1; i <= h; ++i)
            out.exponents[i - 1][j] = (c - 1) * pow(c, h - i);
        h_prev = h;
    }
    return out;
}

Rational chain_bound(std::span<const Integer> chain) {
    require(!chain.empty(), ErrorCode::InvalidArgument, "empty chain");
    Rational best = chain.back();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        best = std::min(best, make_rational(chain[i], chain[i + 1]));
    return best;
}

ExponentMatrix chain_exponents(std::span<const Integer> chain) {
    ExponentMatrix e;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Integer next = i + 1 < chain.size() ? chain[i + 1] : Integer(1);
        e.push_back({Integer(chain[i] - next)});
    }
    return e;
}

Chain optimize_chain(unsigned n, const Integer& d) {
    require(n >= 1, ErrorCode::InvalidArgument, "dimension must be at least 1");
    require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
    Chain best;
    best.c = {d};
    if (n == 1) {
        best.bound = d;
        return best;
    }
    std::vector<Integer> cur{d};
    bool found = false;

    // Chains are visited in lexicographic order and only a strict improvement
    // replaces the best one.
    std::function<void(const Rational&)> dfs = [&](const Rational& partial) {
        const std::size_t i = cur.size();
        if (i == n) {
            Rational v = std::min(partial, Rational(cur.back()));
            if (!found || v > best.bound) {
                best.c = cur;
                best.bound = v;
                found = true;
            }
            return;
        }
        const unsigned remaining = n - static_cast<unsigned>(i);
        const Integer prev = cur.back();
        for (Integer v = 1; v <= prev; ++v) {
            Rational pm = std::min(partial, make_rational(prev, v));
            if (found && pm <= best.bound)
                break;
            // The remaining ratios multiply to v, so their minimum is at most v^(1/remaining).
            if (found && pow(best.bound, remaining) >= v)
                continue;
            cur.push_back(v);
            dfs(pm);
            cur.pop_back();
        }
    };
    dfs(Rational(d));
    return best;
}

Integer integer_nth_root_floor(const Rational& q, unsigned n) {
    require(q >= 0, ErrorCode::InvalidArgument, "root of a negative number");
    require(n >= 1, ErrorCode::InvalidArgument, "root index must be positive");
    Integer f = floor_of(q);
    Integer z;
    mpz_root(z.get_mpz_t(), f.get_mpz_t(), n);
    return z;
}

namespace {

Integer binomial(const Integer& top, unsigned long bottom) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), bottom);
    return r;
}

// Compositions of `total` into `parts` nonnegative summands, lexicographic.
std::vector<std::vector<Integer>> compositions(unsigned long total, std::size_t parts) {
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> cur;
    std::function<void(unsigned long)> rec = [&](unsigned long left) {
        if (cur.size() + 1 == parts) {
            cur.push_back(Integer(left));
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (unsigned long x = 0; x <= left; ++x) {
            cur.push_back(Integer(x));
            rec(left - x);
            cur.pop_back();
        }
    };
    rec(total);
    return out;
}

constexpr unsigned long kExhaustiveDegreeCap = 30;
constexpr unsigned long kExhaustiveCountCap = 200000;

// Largest c admitting block lengths l with c^{l_j} <= d_j and sum l = n.
std::optional<std::pair<Integer, std::vector<unsigned>>> best_canonical(const CIDescriptor& desc) {
    Integer c = *std::max_element(desc.degrees.begin(), desc.degrees.end());
    for (; c >= 1; --c) {
        // Greedy: as many blocks as each degree allows, filled left to right.
        std::vector<unsigned> l;
        unsigned total = 0;
        for (const auto& d : desc.degrees) {
            unsigned lj = 0;
            if (c == 1) {
                lj = desc.n;
            } else {
                while (pow(c, lj + 1) <= d && lj < desc.n)
                    ++lj;
            }
            unsigned take = std::min(lj, desc.n - total);
            l.push_back(take);
            total += take;
        }
        if (total == desc.n)
            return std::make_pair(c, l);
    }
    return std::nullopt;
}

} // namespace

ExponentSearch best_exponents(const CIDescriptor& desc) {
    validate(desc);
    ExponentSearch out;
    if (desc.degrees.size() == 1) {
        Chain chain = optimize_chain(desc.n, desc.degrees[0]);
        out.applies_to = desc;
        out.exponents = chain_exponents(chain.c);
        out.toric = ci_toric_lower_bound(desc, out.exponents);
        out.exhaustive = true;
        return out;
    }

    const std::size_t n = desc.n;
    const std::size_t k = desc.degrees.size();
    Integer degree_sum = 0, count = 1;
    for (const auto& d : desc.degrees) {
        degree_sum += d;
        count *= binomial(Integer(d - 1 + n - 1), n - 1);
    }
    bool have = false;
    if (degree_sum <= kExhaustiveDegreeCap && count <= kExhaustiveCountCap) {
        std::vector<std::vector<std::vector<Integer>>> columns;
        for (const auto& d : desc.degrees)
            columns.push_back(compositions(Integer(d - 1).get_ui(), n));
        std::vector<std::size_t> pick(k, 0);
        ExponentMatrix e(n, std::vector<Integer>(k));
        while (true) {
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    e[i][j] = columns[j][pick[j]][i];
            ToricBound tb = ci_toric_lower_bound(desc, e);
            if (!have || tb.bound > out.toric.bound) {
                out.applies_to = desc;
                out.exponents = e;
                out.toric = std::move(tb);
                have = true;
            }
            std::size_t j = k;
            while (j > 0 && pick[j - 1] + 1 == columns[j - 1].size()) {
                pick[j - 1] = 0;
                --j;
            }
            if (j == 0)
                break;
            ++pick[j - 1];
        }
        out.exhaustive = true;
    }
    if (auto canon = best_canonical(desc)) {
        CanonicalExponents ce = canonical_exponents(desc, canon->first, canon->second);
        ToricBound tb = ci_toric_lower_bound(ce.reduced, ce.exponents);
        if (!have || tb.bound > out.toric.bound) {
            out.applies_to = ce.reduced;
            out.exponents = ce.exponents;
            out.toric = std::move(tb);
            have = true;
        }
    }
    require(have, ErrorCode::InvalidArgument, "no exponent matrix found");
    return out;
}

NefCertificate toric_chain_leaf(unsigned n, const Integer& d, const Integer& weight) {
    Chain chain = optimize_chain(n, d);
    NefCertificate leaf;
    leaf.kind = NefCertificate::Kind::Toric;
    leaf.descriptor = {n, {d}};
    leaf.weights = {weight};
    leaf.chain = chain.c;
    leaf.bound = chain.bound;
    return leaf;
}

NefCertificate combine_nef_certificates(const NefCertificate& a, const NefCertificate& b) {
    const auto& da = a.descriptor;
    const auto& db = b.descriptor;
    require(da.n == db.n, ErrorCode::InvalidArgument, "certificates for different dimensions");
    require(!da.degrees.empty() && da.degrees.size() == db.degrees.size(), ErrorCode::InvalidArgument,
            "certificates for different numbers of equations");
    require(std::equal(da.degrees.begin(), da.degrees.end() - 1, db.degrees.begin()), ErrorCode::InvalidArgument,
            "certificates differ in the leading degrees");
    NefCertificate out;
    out.kind = NefCertificate::Kind::Split;
    out.descriptor = da;
    out.descriptor.degrees.back() = da.degrees.back() + db.degrees.back();
    out.weights = a.weights;
    out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
    out.parts = {a, b};
    return out;
}

void validate_nef_certificate(const NefCertificate& cert) {
    validate(cert.descriptor);
    require(!cert.weights.empty(), ErrorCode::InvalidArgument, "certificate without weights");
    switch (cert.kind) {
    case NefCertificate::Kind::Reference:
        require(!cert.citation.empty(), ErrorCode::ValueMismatch, "reference leaf without citation");
        return;
    case NefCertificate::Kind::Split: {
        require(cert.parts.size() == 2, ErrorCode::ValueMismatch, "split node needs two parts");
        validate_nef_certificate(cert.parts[0]);
        validate_nef_certificate(cert.parts[1]);
        NefCertificate expect = combine_nef_certificates(cert.parts[0], cert.parts[1]);
        if (!(expect.descriptor == cert.descriptor) || expect.weights != cert.weights)
            fail(ErrorCode::ValueMismatch, "split node does not match its parts");
        return;
    }
    case NefCertificate::Kind::Toric: {
        require(cert.weights.size() == 1, ErrorCode::ValueMismatch, "toric leaf must carry a single weight");
        Rational bound;
        if (cert.chain) {
            const auto& c = *cert.chain;
            require(cert.descriptor.degrees.size() == 1 && c.size() == cert.descriptor.n && c.front() == cert.descriptor.degrees[0],
                    ErrorCode::ValueMismatch, "chain does not start at the degree");
            for (std::size_t i = 0; i < c.size(); ++i)
                require(c[i] >= 1 && (i == 0 || c[i] <= c[i - 1]), ErrorCode::ValueMismatch, "chain is not decreasing");
            bound = chain_bound(c);
        } else {
            require(cert.exponents.has_value(), ErrorCode::ValueMismatch, "toric leaf without chain or exponents");
            bound = ci_toric_lower_bound(cert.descriptor, *cert.exponents).bound;
        }
        if (bound != cert.bound)
            fail(ErrorCode::ValueMismatch, "toric leaf claims " + to_string(cert.bound) + " but gives " + to_string(bound));
        if (bound < cert.weights[0])
            fail(ErrorCode::ValueMismatch,
                 "toric bound " + to_string(bound) + " is below the weight " + to_string(cert.weights[0]));
        return;
    }
    }
}

MultipointBound multipoint_hypersurface_bound(unsigned n, const Integer& d, std::span<const Integer> m) {
    require(n >= 1, ErrorCode::InvalidArgument, "dimension must be at least 1");
    require(d >= 1, ErrorCode::InvalidArgument, "degree must be positive");
    require(!m.empty(), ErrorCode::InvalidArgument, "at least one weight is required");
    Integer power_sum = 0;
    for (const auto& mi : m) {
        require(mi >= 1, ErrorCode::InvalidArgument, "weights must be positive");
        power_sum += pow(mi, n);
    }
    MultipointBound out;
    const Rational ratio = make_rational(d, power_sum);
    out.upper = BoundValue::root(ratio, n);
    out.floor = integer_nth_root_floor(ratio, n);
    out.lower = out.floor;
    if (out.floor >= 1) {
        // Greedy split; the remainder goes to the first component.
        Integer used = 0;
        for (const auto& mi : m) {
            out.split.push_back(pow(Integer(out.floor * mi), n));
            used += out.split.back();
        }
        out.split.front() += d - used;
        NefCertificate cert = toric_chain_leaf(n, out.split[0], out.floor * m[0]);
        for (std::size_t i = 1; i < m.size(); ++i)
            cert = combine_nef_certificates(cert, toric_chain_leaf(n, out.split[i], out.floor * m[i]));
        validate_nef_certificate(cert);
        out.certificate = std::move(cert);
    }
    if (m.size() == 1) {
        Chain chain = optimize_chain(n, d);
        Rational scaled = chain.bound / m[0];
        if (scaled > out.lower)
            out.lower = scaled;
        out.refinement = std::move(chain);
    }
    out.exact = compare(out.lower, out.upper) == 0;
    return out;
}

FanoValue ci_fano_exact_value(const CIDescriptor& input) {
    CIDescriptor desc = input;
    validate(desc);
    std::sort(desc.degrees.begin(), desc.degrees.end());
    require(desc.degrees.front() >= 2, ErrorCode::InvalidArgument, "degrees must be at least 2");
    const std::size_t k = desc.degrees.size();
    Integer sum = std::accumulate(desc.degrees.begin(), desc.degrees.end(), Integer(0));
    const Integer range = Integer(desc.n) + Integer(k);
    if (sum > range)
        fail(ErrorCode::NotFano, "not Fano of index >= 1");

    FanoValue out;
    if (sum < range) {
        out.value = 1;
        out.covered_by_lines = true;
        return out;
    }
    const Integer& dk = desc.degrees.back();
    out.value = make_rational(dk, dk - 1);

    CurveWitness curve{dk * factorial(Integer(dk - 2).get_ui()), factorial(Integer(dk - 1).get_ui())};
    for (std::size_t j = 0; j + 1 < k; ++j) {
        Integer f = factorial(desc.degrees[j].get_ui());
        curve.degree *= f;
        curve.multiplicity *= f;
    }
    out.curve = curve;

    // One unit exponent per coordinate, d_j - 1 coordinates for equation j.
    ExponentMatrix e(desc.n, std::vector<Integer>(k, Integer(0)));
    std::size_t i = 0;
    for (std::size_t j = 0; j < k; ++j)
        for (Integer c = 1; c < desc.degrees[j]; ++c)
            e[i++][j] = 1;
    ToricBound tb = ci_toric_lower_bound(desc, e);
    if (tb.bound != out.value || make_rational(curve.degree, curve.multiplicity) != out.value)
        fail(ErrorCode::ValueMismatch, "lower and upper witnesses disagree");
    out.exponents = std::move(e);
    out.toric_bound = tb.bound;
    return out;
}

namespace {

LatticePolytope integral_polytope(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<IntVector> v;
    for (const auto& p : pts) {
        IntVector x;
        for (long c : p)
            x.push_back(Integer(c));
        v.push_back(std::move(x));
    }
    return LatticePolytope::from_points(std::span<const IntVector>(v));
}

} // namespace

std::vector<FanoRow> fano_table() {
    using V = FanoRow::Verification;
    const std::string ilp = "toric degenerations of Ilten, Lewis and Przyjalkowski; moment polytope not reproduced here";
    const std::string conics = "X is covered by conics, so the value is at most 2";
    const std::string del_pezzo = "a larger value would make the blow-up a del Pezzo 3-fold of Picard number 2, "
                                  "which the classification excludes";
    const std::string lines = "X is covered by lines, so the value is at most the index";

    std::vector<FanoRow> rows = {
        {1, 1, "2", 2, "hypersurface of degree 6 in P(1,1,1,1,3)", Rational(6, 5), V::Computed, {},
         "closed form for conv(e1, e2, e3, -(e1+e2+e3)/3)", "upper bound 6/5 from a surface through the point "
                                                              "on the double cover of P^3"},
        {2, 1, "4", 4, "quartic in P^4", Rational(4, 3), V::Computed, {}, "complete intersection (3; 4)", ""},
        {3, 1, "6", 6, "complete intersection of a quadric and a cubic", Rational(3, 2), V::Computed, {},
         "complete intersection (3; 2, 3)", ""},
        {4, 1, "8", 8, "complete intersection of three quadrics", Rational(2), V::Computed, {},
         "complete intersection (3; 2, 2, 2)", ""},
        {5, 1, "10", 10, "section of G(2,5) by 2 hyperplanes and a quadric", Rational(2), V::Reference, {}, "", ""},
        {6, 1, "12", 12, "X_12 in P^8", Rational(2), V::Reference, {}, "", ""},
        {7, 1, "14", 14, "section of G(2,6) by 5 hyperplanes", Rational(2), V::Reference, {}, "", ""},
        {8, 1, "16", 16, "X_16 in P^10", Rational(2), V::Reference, {}, "", ""},
        {9, 1, "18", 18, "X_18 in P^11", Rational(2), V::Reference, {}, "", ""},
        {10, 1, "22", 22, "X_22 in P^13", Rational(2), V::Reference, {}, "", ""},
        {11, 2, "8·1", 8, "hypersurface of degree 6 in P(1,1,1,2,3)", Rational(2), V::Computed, {},
         "projection bound for conv(0, 2e1, 2e2, -2e1-2e2+2e3)", del_pezzo},
        {12, 2, "8·2", 16, "hypersurface of degree 4 in P(1,1,1,1,2)", Rational(2), V::Reference, {}, "", ""},
        {13, 2, "8·3", 24, "cubic in P^4", Rational(2), V::Computed, {}, "index 2 times the chain bound for (3; 3)",
         del_pezzo},
        {14, 2, "8·4", 32, "complete intersection of two quadrics", Rational(2), V::Computed, {},
         "index 2 times the exponent bound for (3; 2, 2)", del_pezzo},
        {15, 2, "8·5", 40, "section of G(2,5) by 3 hyperplanes", Rational(2), V::Reference, {}, "", ""},
        {16, 3, "27·2", 54, "quadric in P^4", Rational(3), V::Computed, {}, "index 3 times the chain bound for (3; 2)",
         lines},
        {17, 4, "64·1", 64, "P^3", Rational(4), V::Computed, {}, "projection bound for 4 times the standard simplex",
         lines},
    };
    for (auto& r : rows) {
        if (r.verification == V::Reference) {
            r.method = "lower bound 2 from the " + ilp;
            r.citation = r.no <= 10 ? conics : del_pezzo;
        }
    }

    const std::vector<Rational> third(3, Rational(1, 3));
    rows[0].computed = simplex_lower_bound(third);
    for (auto [row, degrees] : {std::pair<int, std::vector<long>>{1, {4}}, {2, {2, 3}}, {3, {2, 2, 2}}}) {
        CIDescriptor desc{3, {}};
        for (long d : degrees)
            desc.degrees.push_back(Integer(d));
        FanoValue fv = ci_fano_exact_value(desc);
        rows[row].computed = fv.value;
        rows[row].citation = "curve of degree " + to_string(fv.curve->degree) + " and multiplicity " +
                             to_string(fv.curve->multiplicity) + " through the point";
    }
    LatticePolytope p11 = integral_polytope({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {-2, -2, 2}});
    rows[10].computed = estimate_interior(p11, SearchStrategy::defaults_for_rank(3)).lower;
    rows[12].computed = 2 * optimize_chain(3, Integer(3)).bound;
    rows[13].computed = 2 * best_exponents(CIDescriptor{3, {Integer(2), Integer(2)}}).toric.bound;
    rows[15].computed = 3 * optimize_chain(3, Integer(2)).bound;
    LatticePolytope p17 = integral_polytope({{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
    rows[16].computed = estimate_interior(p17, SearchStrategy::defaults_for_rank(3)).lower;
    return rows;
}

} // namespace seshadri
