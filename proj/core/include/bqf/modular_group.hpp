#pragma once

#include "bqf/forms.hpp"
#include "bqf/integer.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bqf {

/// Element of the extended modular group, stored as an integer matrix
///
///     ( r  s )
///     ( t  u )      with ru - st = +1 or -1,
///
/// modulo the global sign. The stored representative has t > 0, or t = 0
/// and u > 0, so equality is plain field comparison.
///
/// Determinant +1 elements form the modular group PSL(2,Z); determinant -1
/// elements are the coset containing the reflection R = diag(1,-1).
class GroupElement {
public:
    /// Throws domain_error unless ru - st is +1 or -1.
    GroupElement(Int r, Int s, Int t, Int u);

    static GroupElement identity();

    const Int& r() const { return r_; }
    const Int& s() const { return s_; }
    const Int& t() const { return t_; }
    const Int& u() const { return u_; }
    /// +1 or -1.
    int det() const { return det_; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    Int r_, s_, t_, u_;
    int det_ = 1;
};

/// Letters of the presentation. V stands for U^2.
enum class Letter : char { R = 'R', T = 'T', U = 'U', V = 'V' };

/// Word over {R, T, U, V}; its value is the left-to-right matrix product.
struct GeneratorWord {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// T = (0,-1;1,0), U = (0,-1;1,1), V = U*U, R = (1,0;0,-1).
GroupElement generator_element(Letter letter);
/// Throws parse_error for anything but R, T, U, V.
Letter parse_letter(char ch);

/// Matrix product g*h.
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// The substitution F(rX + sY, tX + uY):
///
///     A = a r^2 + b r t + c t^2
///     B = 2 a r s + b r u + b s t + 2 c t u
///     C = a s^2 + b s u + c u^2
///
/// This is a right action: act_on_form(g, act_on_form(h, F)) equals
/// act_on_form(compose(h, g), F). A word applied to a form therefore reads
/// left to right as the order in which its letters are applied.
QuadraticForm act_on_form(const GroupElement& g, const QuadraticForm& f);

GroupElement word_to_element(const GeneratorWord& w);

/// Canonical word for g: an optional leading R followed by an alternating
/// product of T and U/V. word_to_element(element_to_word(g)) == g.
GeneratorWord element_to_word(const GroupElement& g);

/// Rewrites to the normal form returned by element_to_word. Only identities
/// that hold for the generator matrices are used:
///
///     RR = TT = UV = VU = 1,  UU = V,  VV = U,
///     TR = RT,  UR = R TVT,  VR = R TUT.
///
/// The last two encode (RTU)^2 = 1: conjugation by the mirror R inverts the
/// translation TU. Note (RU)^2 is *not* the identity for these matrices.
GeneratorWord normalize_word(const GeneratorWord& w);

/// "RTUV"-style text; the empty word prints as "".
std::string to_string(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text);

/// "r,s;t,u" of the canonical representative.
std::string to_string(const GroupElement& g);
GroupElement parse_element(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GroupElement& g);
std::ostream& operator<<(std::ostream& os, const GeneratorWord& w);

}  // namespace bqf
