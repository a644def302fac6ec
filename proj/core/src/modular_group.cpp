#include "bqf/modular_group.hpp"

#include "text_util.hpp"

#include <ostream>

namespace bqf {

GroupElement::GroupElement(Int r, Int s, Int t, Int u)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)), u_(std::move(u)) {
    Int d = r_ * u_ - s_ * t_;
    if (d == 1) {
        det_ = 1;
    } else if (d == -1) {
        det_ = -1;
    } else {
        throw domain_error("group element needs determinant +1 or -1, got " + to_string(d));
    }
    if (t_ < 0 || (t_ == 0 && u_ < 0)) {
        r_ = -r_;
        s_ = -s_;
        t_ = -t_;
        u_ = -u_;
    }
}

GroupElement GroupElement::identity() { return {1, 0, 0, 1}; }

GroupElement generator_element(Letter letter) {
    switch (letter) {
        case Letter::R: return {1, 0, 0, -1};
        case Letter::T: return {0, -1, 1, 0};
        case Letter::U: return {0, -1, 1, 1};
        case Letter::V: return {-1, -1, 1, 0};
    }
    throw parse_error("unknown generator letter");
}

Letter parse_letter(char ch) {
    switch (ch) {
        case 'R': return Letter::R;
        case 'T': return Letter::T;
        case 'U': return Letter::U;
        case 'V': return Letter::V;
        default: throw parse_error(std::string("unknown generator letter '") + ch + "'");
    }
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    return {g.r() * h.r() + g.s() * h.t(), g.r() * h.s() + g.s() * h.u(),
            g.t() * h.r() + g.u() * h.t(), g.t() * h.s() + g.u() * h.u()};
}

GroupElement inverse(const GroupElement& g) {
    // adj(g) / det(g); the sign is absorbed by canonicalization.
    return {g.u(), -g.s(), -g.t(), g.r()};
}

QuadraticForm act_on_form(const GroupElement& g, const QuadraticForm& f) {
    const Int &r = g.r(), &s = g.s(), &t = g.t(), &u = g.u();
    return {f.a * r * r + f.b * r * t + f.c * t * t,
            2 * f.a * r * s + f.b * (r * u + s * t) + 2 * f.c * t * u,
            f.a * s * s + f.b * s * u + f.c * u * u};
}

GroupElement word_to_element(const GeneratorWord& w) {
    GroupElement g = GroupElement::identity();
    for (Letter x : w.letters) g = compose(g, generator_element(x));
    return g;
}

namespace {

// Reduced product of T and U/V letters; the stack alternates between T and
// one of U, V, which is the free product normal form of C2 * C3.
class AlternatingStack {
public:
    void push(Letter x) {
        if (letters_.empty()) {
            letters_.push_back(x);
            return;
        }
        Letter top = letters_.back();
        if (x == Letter::T) {
            if (top == Letter::T)
                letters_.pop_back();
            else
                letters_.push_back(x);
            return;
        }
        if (top == Letter::T) {
            letters_.push_back(x);
        } else if (top != x) {
            letters_.pop_back();  // UV or VU
        } else {
            letters_.back() = (x == Letter::U) ? Letter::V : Letter::U;
        }
    }

    // Conjugation by R: T -> T, U -> TVT, V -> TUT.
    AlternatingStack mirrored() const {
        AlternatingStack out;
        for (Letter x : letters_) {
            if (x == Letter::T) {
                out.push(Letter::T);
            } else {
                out.push(Letter::T);
                out.push(x == Letter::U ? Letter::V : Letter::U);
                out.push(Letter::T);
            }
        }
        return out;
    }

    std::vector<Letter>& letters() { return letters_; }

private:
    std::vector<Letter> letters_;
};

void append_translation(GeneratorWord& w, const Int& k) {
    // (TU)^k = z -> z + k, and (TU)^-1 = VT.
    Int n = abs(k);
    for (Int i = 0; i < n; ++i) {
        if (k > 0) {
            w.letters.push_back(Letter::T);
            w.letters.push_back(Letter::U);
        } else {
            w.letters.push_back(Letter::V);
            w.letters.push_back(Letter::T);
        }
    }
}

}  // namespace

GeneratorWord normalize_word(const GeneratorWord& w) {
    bool mirrored = false;
    AlternatingStack stack;
    for (Letter x : w.letters) {
        if (x == Letter::R) {
            // Move this R left past everything accumulated so far.
            stack = stack.mirrored();
            mirrored = !mirrored;
        } else {
            stack.push(x);
        }
    }
    GeneratorWord out;
    if (mirrored) out.letters.push_back(Letter::R);
    auto& rest = stack.letters();
    out.letters.insert(out.letters.end(), rest.begin(), rest.end());
    return out;
}

GeneratorWord element_to_word(const GroupElement& g) {
    GeneratorWord raw;
    GroupElement h = g;
    if (h.det() < 0) {
        raw.letters.push_back(Letter::R);
        h = compose(generator_element(Letter::R), h);
    }
    // Euclid on the first column: h = S^k T h' with h' = T S^-k h, whose
    // bottom-left entry is r mod t, strictly smaller than t.
    while (h.t() != 0) {
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), h.r().get_mpz_t(), h.t().get_mpz_t());
        append_translation(raw, k);
        raw.letters.push_back(Letter::T);
        GroupElement shifted{h.r() - k * h.t(), h.s() - k * h.u(), h.t(), h.u()};
        h = compose(generator_element(Letter::T), shifted);
    }
    // h = (1, s; 0, 1) after canonicalization.
    append_translation(raw, h.s());
    return normalize_word(raw);
}

std::string to_string(const GeneratorWord& w) {
    std::string s;
    s.reserve(w.letters.size());
    for (Letter x : w.letters) s.push_back(static_cast<char>(x));
    return s;
}

GeneratorWord parse_word(std::string_view text) {
    GeneratorWord w;
    for (char ch : text) w.letters.push_back(parse_letter(ch));
    return w;
}

std::string to_string(const GroupElement& g) {
    return to_string(g.r()) + "," + to_string(g.s()) + ";" + to_string(g.t()) + "," + to_string(g.u());
}

GroupElement parse_element(std::string_view text) {
    auto rows = detail::split(text, ';');
    if (rows.size() == 2) {
        auto top = detail::split(rows[0], ',');
        auto bottom = detail::split(rows[1], ',');
        if (top.size() == 2 && bottom.size() == 2)
            return {parse_int(top[0]), parse_int(top[1]), parse_int(bottom[0]), parse_int(bottom[1])};
    }
    throw parse_error("expected a matrix 'r,s;t,u', got '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, const GeneratorWord& w) { return os << to_string(w); }

}  // namespace bqf
