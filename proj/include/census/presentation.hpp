#ifndef CENSUS_PRESENTATION_HPP
#define CENSUS_PRESENTATION_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <census/homology.hpp>

namespace census {

// Word in a free group: letters are +-(index+1) for generator index 0,1,...
using Word = std::vector<int>;

inline Word free_reduce(Word w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

inline Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

struct Presentation {
    int gens = 0;
    std::vector<Word> relators;

    bool operator==(const Presentation&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "gens " << gens;
        for (const Word& r : relators) {
            os << "; rel";
            for (int x : r) {
                char c = char('a' + std::abs(x) - 1);
                if (x < 0) c = char(std::toupper(c));
                os << ' ' << c;
            }
        }
        return os.str();
    }

    static Presentation parse(const std::string& s) {
        Presentation p;
        std::string tok;
        std::istringstream is(s);
        std::string part;
        bool first = true;
        while (std::getline(is, part, ';')) {
            std::istringstream ps(part);
            std::string head;
            ps >> head;
            if (first) {
                if (head != "gens") throw std::runtime_error("presentation: expected 'gens'");
                ps >> p.gens;
                first = false;
                continue;
            }
            if (head != "rel") throw std::runtime_error("presentation: expected 'rel'");
            Word w;
            while (ps >> tok) {
                for (char c : tok) {
                    if (std::islower(c))
                        w.push_back(c - 'a' + 1);
                    else
                        w.push_back(-(c - 'A' + 1));
                }
            }
            p.relators.push_back(w);
        }
        return p;
    }
};

// Exponent-sum matrix -> invariant factors of the abelianisation.
inline AbGroup abelianization(const Presentation& p) {
    IntMat rel;
    for (const Word& w : p.relators) {
        std::vector<long long> row(p.gens, 0);
        for (int x : w) row[std::abs(x) - 1] += (x > 0 ? 1 : -1);
        rel.push_back(std::move(row));
    }
    return cokernel(rel, p.gens);
}

struct SimplifyResult {
    Presentation p;
    bool budget_exhausted = false;
};

namespace detail {

// remove generator g (1-based) by substituting the word `value` for it
inline void substitute(Presentation& p, int g, const Word& value) {
    Word inv = inverse_word(value);
    std::vector<Word> out;
    for (Word& r : p.relators) {
        Word nw;
        for (int x : r) {
            if (x == g)
                nw.insert(nw.end(), value.begin(), value.end());
            else if (x == -g)
                nw.insert(nw.end(), inv.begin(), inv.end());
            else
                nw.push_back(x);
        }
        nw = cyclic_reduce(std::move(nw));
        if (!nw.empty()) out.push_back(std::move(nw));
    }
    // renumber: drop g
    for (Word& r : out)
        for (int& x : r) {
            int a = std::abs(x);
            if (a > g) x = (x > 0) ? x - 1 : x + 1;
        }
    p.relators = std::move(out);
    p.gens -= 1;
}

// search for `pat` inside the doubled cyclic word `hay`; returns start or -1
inline int find_sub(const Word& hay, const Word& pat) {
    if (pat.empty() || pat.size() > hay.size()) return -1;
    Word doubled = hay;
    doubled.insert(doubled.end(), hay.begin(), hay.end());
    for (size_t i = 0; i < hay.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < pat.size() && ok; ++j)
            if (doubled[i + j] != pat[j]) ok = false;
        if (ok) return int(i);
    }
    return -1;
}

}  // namespace detail

// Elementary simplification passes applied to a fixpoint under a budget:
// free/cyclic reduction, short-relator generator elimination, elimination
// of a generator occurring exactly once in some relator, and replacement of
// long common subwords between relators.  The result presents the same
// group.
inline SimplifyResult tietze_simplify(Presentation p, int max_passes = 10000, size_t length_cap = 512) {
    int passes = 0;
    bool flagged = false;
    bool changed = true;
    auto tidy = [&](Presentation& q) {
        std::vector<Word> out;
        for (Word& r : q.relators) {
            Word w = cyclic_reduce(std::move(r));
            if (!w.empty()) out.push_back(std::move(w));
        }
        std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        q.relators = std::move(out);
    };
    tidy(p);
    while (changed) {
        if (++passes > max_passes) {
            flagged = true;
            break;
        }
        changed = false;

        // a generator occurring exactly once in some relator can be solved for
        for (size_t ri = 0; ri < p.relators.size() && !changed; ++ri) {
            const Word& r = p.relators[ri];
            for (int g = 1; g <= p.gens && !changed; ++g) {
                int count = 0, pos = -1;
                for (size_t k = 0; k < r.size(); ++k)
                    if (std::abs(r[k]) == g) {
                        ++count;
                        pos = int(k);
                    }
                if (count != 1) continue;
                // r = u g^s v  =>  g^s = u^-1 v^-1
                Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
                Word rhs = inverse_word(u);
                Word vinv = inverse_word(v);
                rhs.insert(rhs.end(), vinv.begin(), vinv.end());
                if (r[pos] < 0) rhs = inverse_word(rhs);  // g = rhs
                Presentation q = p;
                q.relators.erase(q.relators.begin() + ri);
                detail::substitute(q, g, rhs);
                tidy(q);
                p = std::move(q);
                changed = true;
            }
        }
        if (changed) continue;

        // subword replacement: use a short relator to shorten a longer one
        for (size_t i = 0; i < p.relators.size() && !changed; ++i) {
            for (size_t j = 0; j < p.relators.size() && !changed; ++j) {
                if (i == j) continue;
                const Word& shrt = p.relators[i];
                Word& lng = p.relators[j];
                if (shrt.size() > lng.size()) continue;
                size_t piece = shrt.size() / 2 + 1;  // strictly more than half
                for (int variant = 0; variant < 2 && !changed; ++variant) {
                    Word s = variant ? inverse_word(shrt) : shrt;
                    // try every rotation of s, take its long prefix as pattern
                    for (size_t rot = 0; rot < s.size() && !changed; ++rot) {
                        Word srot(s.begin() + rot, s.end());
                        srot.insert(srot.end(), s.begin(), s.begin() + rot);
                        Word pat(srot.begin(), srot.begin() + piece);
                        int at = detail::find_sub(lng, pat);
                        if (at < 0) continue;
                        // replace pat by inverse of the complement: srot = pat * rest
                        Word rest(srot.begin() + piece, srot.end());
                        Word repl = inverse_word(rest);
                        if (repl.size() >= pat.size()) continue;
                        Word doubled = lng;
                        doubled.insert(doubled.end(), lng.begin(), lng.end());
                        Word nw(doubled.begin() + at + piece, doubled.begin() + at + lng.size());
                        nw.insert(nw.end(), repl.begin(), repl.end());
                        nw = cyclic_reduce(std::move(nw));
                        if (nw.size() >= lng.size()) continue;
                        if (nw.size() > length_cap) {
                            flagged = true;
                            continue;
                        }
                        lng = std::move(nw);
                        tidy(p);
                        changed = true;
                    }
                }
            }
        }
    }
    tidy(p);
    return {std::move(p), flagged};
}

// Syntactic recogniser for <x,y | x^a = y^b>: the single relator, up to
// cyclic rotation, inversion and generator order, is a block x^s y^t.
// Returns (|s|, |t|) in relator order.
inline std::optional<std::pair<int, int>> recognize_torus_group(const Presentation& p) {
    if (p.gens != 2 || p.relators.size() != 1) return std::nullopt;
    Word r = cyclic_reduce(p.relators[0]);
    if (r.empty()) return std::nullopt;
    // block decomposition (cyclic): list of (generator, signed run length)
    std::vector<std::pair<int, int>> blocks;
    for (int x : r) {
        int g = std::abs(x), s = x > 0 ? 1 : -1;
        if (!blocks.empty() && blocks.back().first == g &&
            ((blocks.back().second > 0) == (s > 0)))
            blocks.back().second += s;
        else
            blocks.emplace_back(g, s);
    }
    // merge cyclic wrap
    if (blocks.size() >= 2 && blocks.front().first == blocks.back().first &&
        (blocks.front().second > 0) == (blocks.back().second > 0)) {
        blocks.front().second += blocks.back().second;
        blocks.pop_back();
    }
    if (blocks.size() != 2) return std::nullopt;
    if (blocks[0].first == blocks[1].first) return std::nullopt;
    return std::make_pair(std::abs(blocks[0].second), std::abs(blocks[1].second));
}

struct NonHypPattern {
    int tag = 0;  // 1: a^n (a^p b^q)^k, 2: the fixed 8-letter relator, 3: [a^n, b^m]
    int n = 0, p = 0, q = 0, k = 0;  // parameters for tags 1 and 3 (3 uses n,m=q)
};

namespace detail {

inline std::vector<std::pair<int, int>> cyclic_blocks(const Word& r) {
    std::vector<std::pair<int, int>> blocks;
    for (int x : r) {
        int g = std::abs(x), s = x > 0 ? 1 : -1;
        if (!blocks.empty() && blocks.back().first == g && ((blocks.back().second > 0) == (s > 0)))
            blocks.back().second += s;
        else
            blocks.emplace_back(g, s);
    }
    if (blocks.size() >= 2 && blocks.front().first == blocks.back().first &&
        (blocks.front().second > 0) == (blocks.back().second > 0)) {
        blocks.front().second += blocks.back().second;
        blocks.pop_back();
    }
    return blocks;
}

// match blocks (cyclically rotated already) against a^n (a^p b^q)^k
inline std::optional<NonHypPattern> match_tag1(std::vector<std::pair<int, int>> blocks, int agen) {
    int bgen = agen == 1 ? 2 : 1;
    if (blocks.empty()) return std::nullopt;
    // rotate so the first block is an a-block
    for (size_t rot = 0; rot < blocks.size(); ++rot) {
        if (blocks[rot].first != agen) continue;
        std::vector<std::pair<int, int>> b;
        for (size_t i = 0; i < blocks.size(); ++i) b.push_back(blocks[(rot + i) % blocks.size()]);
        // expect alternating a,b,a,b,...
        bool alternating = true;
        for (size_t i = 0; i < b.size(); ++i) {
            int want = (i % 2 == 0) ? agen : bgen;
            if (b[i].first != want) alternating = false;
        }
        if (!alternating || b.size() % 2 != 0) continue;
        int k = int(b.size()) / 2;
        // all b blocks must carry the same exponent q
        int q = b[1].second;
        bool okq = true;
        for (int i = 0; i < k; ++i)
            if (b[2 * i + 1].second != q) okq = false;
        if (!okq || q == 0) continue;
        if (k == 1) {
            int s = b[0].second;  // s = n + p, take p = 0
            if (s == 0) continue;
            return NonHypPattern{1, s, 0, q, 1};
        }
        // interior a blocks fix p
        int pexp = b[2].second;
        bool okp = true;
        for (int i = 1; i < k; ++i)
            if (b[2 * i].second != pexp) okp = false;
        if (!okp) continue;
        int nexp = b[0].second - pexp;
        if (nexp == 0) continue;
        return NonHypPattern{1, nexp, pexp, q, k};
    }
    return std::nullopt;
}

}  // namespace detail

// Syntactic recogniser for the two-generator one-relator shapes that rule
// out hyperbolicity: tag 1 is a^n (a^p b^q)^k with k,n,q != 0, tag 2 the
// relator a2 b-1 a-1 b2 a-1 b-1, tag 3 the commutator [a^n, b^m].  Checked
// up to cyclic rotation, inversion and generator renaming.
inline std::optional<NonHypPattern> recognize_nonhyp_pattern(const Presentation& p) {
    if (p.gens != 2 || p.relators.size() != 1) return std::nullopt;
    Word base = cyclic_reduce(p.relators[0]);
    if (base.empty()) return std::nullopt;

    for (int invert = 0; invert < 2; ++invert) {
        Word r = invert ? inverse_word(base) : base;
        auto blocks = detail::cyclic_blocks(r);

        // tag 3 first within shapes: [a^n, b^m] = a^n b^m a^-n b^-m
        if (blocks.size() == 4) {
            for (int agen = 1; agen <= 2; ++agen) {
                int bgen = agen == 1 ? 2 : 1;
                for (int rot = 0; rot < 4; ++rot) {
                    auto b = blocks;
                    std::rotate(b.begin(), b.begin() + rot, b.end());
                    if (b[0].first == agen && b[1].first == bgen && b[2].first == agen && b[3].first == bgen &&
                        b[0].second == -b[2].second && b[1].second == -b[3].second) {
                        return NonHypPattern{3, std::abs(b[0].second), 0, std::abs(b[1].second), 0};
                    }
                }
            }
        }

        // tag 2: literal 8-letter relator in either generator order
        if (r.size() == 8) {
            for (int agen = 1; agen <= 2; ++agen) {
                int bgen = agen == 1 ? 2 : 1;
                Word pat{agen, agen, -bgen, -agen, bgen, bgen, -agen, -bgen};
                if (detail::find_sub(r, pat) >= 0) return NonHypPattern{2, 0, 0, 0, 0};
            }
        }

        for (int agen = 1; agen <= 2; ++agen) {
            auto m = detail::match_tag1(blocks, agen);
            if (m) return m;
        }
    }
    return std::nullopt;
}

}  // namespace census

#endif
