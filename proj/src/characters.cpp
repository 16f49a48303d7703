#include "dualvar/characters.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dualvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw invalid_input_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (...) {
            throw parse_error("invalid partition part '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw parse_error("invalid partition part '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw parse_error("empty partition");
    std::vector<int> sorted = parts;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted != parts)
        throw parse_error("partition parts must be listed weakly decreasing");
    return Partition(parts);
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw invalid_input_error("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    // lexicographically decreasing enumeration
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_char_memo;
std::mutex g_char_mutex;

long long character_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (lambda.empty() && mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }

    int r = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());

    // beta set: strictly decreasing first-column hook lengths
    int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);

    long long acc = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        int nk = static_cast<int>(nb.size());
        for (int j = 0; j < nk; ++j) {
            int part = nb[j] - (nk - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = character_rec(nl, mu_rest);
        acc += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(std::move(key), acc);
    return acc;
}

} // namespace

long long character(const Partition& lambda, const CycleType& mu) {
    if (lambda.n() != mu.n())
        throw invalid_input_error("character: partition and cycle type have different sizes");
    return character_rec(lambda.parts(), mu.parts());
}

CycleType cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i)
        if (check[i] != i) throw invalid_input_error("cycle_type: not a permutation of 0..n-1");
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return CycleType(lens);
}

long long centralizer_order(const CycleType& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    long long order = 1;
    for (const auto& [len, m] : mult) {
        for (int i = 1; i <= m; ++i) order *= i; // m!
        for (int i = 0; i < m; ++i) order *= len; // len^m
    }
    return order;
}

std::vector<int> class_representative(const CycleType& mu, int n) {
    if (mu.n() != n) throw invalid_input_error("class_representative: cycle type size mismatch");
    std::vector<int> perm(n);
    int start = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

Scalar immanant(const Partition& lambda, const ExactMatrix& m) {
    int n = lambda.n();
    if (m.rows() != m.cols() || static_cast<int>(m.rows()) != n)
        throw invalid_input_error("immanant: matrix size must equal the partition size");
    if (n > 8) throw invalid_input_error("immanant: full expansion capped at n <= 8");

    // character lookup per cycle type
    std::map<std::vector<int>, long long> chi;
    for (const Partition& mu : partitions_of(n)) chi[mu.parts()] = character(lambda, mu);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar acc = Scalar::zero(m.field());
    do {
        long long c = chi[cycle_type(perm).parts()];
        if (c == 0) continue;
        Scalar prod = Scalar::from_int(c, m.field());
        for (int i = 0; i < n && !prod.is_zero(); ++i) prod *= m.at(i, perm[i]);
        acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

// sigma * tau: apply tau first ("one-line" composition); cycle types of products in
// either order agree, which is all the callers rely on.
std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau) {
    std::vector<int> r(sigma.size());
    for (std::size_t x = 0; x < sigma.size(); ++x) r[x] = sigma[tau[x]];
    return r;
}

std::vector<int> transposition(int n, int a, int b) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[a], t[b]);
    return t;
}

// the four group elements of <(ab), (ce)> for disjoint {a,b}, {c,e} (0-based)
std::vector<std::vector<int>> four_group(int n, int a, int b, int c, int e) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> t1 = transposition(n, a, b);
    std::vector<int> t2 = transposition(n, c, e);
    return {id, t1, t2, compose(t1, t2)};
}

} // namespace

long long four_term_sum(const Partition& lambda, const std::vector<int>& sigma, int i, int p,
                        int q) {
    int n = lambda.n();
    if (n < 4)
        throw invalid_input_error("four_term_sum requires n >= 4");
    if (static_cast<int>(sigma.size()) != n)
        throw invalid_input_error("four_term_sum: permutation size mismatch");
    auto in_range = [n](int x) { return x >= 1 && x <= n - 1; };
    if (!in_range(i) || !in_range(p) || !in_range(q) || i == p || i == q || p == q)
        throw invalid_input_error(
            "four_term_sum needs pairwise distinct 1-based indices i, p, q in 1..n-1");
    long long acc = 0;
    for (const auto& tau : four_group(n, i - 1, p - 1, q - 1, n - 1))
        acc += character(lambda, cycle_type(compose(sigma, tau)));
    return acc;
}

namespace {

// all unordered pairs of disjoint unordered index pairs {{a,b},{c,e}} in 0..n-1
std::vector<std::array<int, 4>> disjoint_pair_tuples(int n) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = a; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    if (std::make_pair(c, e) <= std::make_pair(a, b)) continue;
                    if (c == a || c == b || e == a || e == b) continue;
                    out.push_back({a, b, c, e});
                }
    return out;
}

} // namespace

std::vector<Partition> classify_partitions(int n) {
    if (n < 4)
        throw invalid_input_error("classify_partitions requires n >= 4");
    if (n > 12)
        throw invalid_input_error("classify_partitions capped at n <= 12");
    std::vector<Partition> classes = partitions_of(n);
    std::vector<std::array<int, 4>> tuples = disjoint_pair_tuples(n);

    std::vector<Partition> good;
    for (const Partition& lambda : partitions_of(n)) {
        bool ok = true;
        for (const Partition& mu : classes) {
            std::vector<int> rep = class_representative(mu, n);
            for (const auto& [a, b, c, e] : tuples) {
                long long acc = 0;
                for (const auto& tau : four_group(n, a, b, c, e))
                    acc += character(lambda, cycle_type(compose(rep, tau)));
                if (acc != 0) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) good.push_back(lambda);
    }
    return good;
}

namespace {

ExactMatrix four_term_system(int n) {
    std::vector<Partition> classes = partitions_of(n);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i].parts()] = i;

    std::vector<std::array<int, 4>> tuples = disjoint_pair_tuples(n);
    Field f = Field::rationals();
    std::vector<SVector> rows;
    for (const Partition& mu : classes) {
        std::vector<int> rep = class_representative(mu, n);
        for (const auto& [a, b, c, e] : tuples) {
            SVector row(classes.size(), Scalar::zero(f));
            for (const auto& tau : four_group(n, a, b, c, e)) {
                std::size_t j = index.at(cycle_type(compose(rep, tau)).parts());
                row[j] += Scalar::one(f);
            }
            rows.push_back(std::move(row));
        }
    }
    return ExactMatrix::from_rows(rows);
}

} // namespace

std::size_t class_function_space_dim(int n) {
    if (n < 4) throw invalid_input_error("class_function_space_dim requires n >= 4");
    ExactMatrix sys = four_term_system(n);
    return sys.cols() - rank(sys);
}

ExactMatrix class_function_solution_basis(int n) {
    if (n < 4) throw invalid_input_error("class_function_solution_basis requires n >= 4");
    return kernel_basis(four_term_system(n));
}

} // namespace dualvar
