#pragma once

// Maps between so(3) generators and bivectors of Euclidean 3-space:
//   weak convention    Jp  =  1/2 sum_{a,b} eps_abp  e_a ^ e_b
//   strong convention  J'p = -1/4 sum_{a,b} eps_abp  e_a ^ e_b
// and the inverse  e_a ^ e_b = sum_p eps_abp Jp  (weak convention).

#include <stdexcept>

#include "spinclif/pbw.hpp"
#include "spinclif/tensor_ops.hpp"

namespace spinclif {

enum class GeneratorConvention { weak, strong };

inline Rational generator_scale(GeneratorConvention conv) {
    return conv == GeneratorConvention::weak ? Rational(1, 2) : Rational(-1, 4);
}

// The generator Jp (or J'p) as a degree-2 element in vector words.
inline ElementQ generator_bivector(int p, GeneratorConvention conv = GeneratorConvention::weak) {
    if (p < 1 || p > 3) throw std::invalid_argument("generator index must be in 1..3");
    ElementQ acc(3);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            int eps = epsilon(a, b, p);
            if (eps == 0) continue;
            acc += Rational(eps) * wedge(ElementQ::basis_vector(a, 3), ElementQ::basis_vector(b, 3));
        }
    return generator_scale(conv) * acc;
}

// Substitutes each generator by its bivector and multiplies out; the result
// lives in vector words of degree 2 * (input degree).
inline ElementQ embed_generators(const ElementQ& x, GeneratorConvention conv = GeneratorConvention::weak) {
    if (x.dim() != 3) throw std::invalid_argument("embed_generators: expected an element over the 3 generators");
    ElementQ out(3);
    for (const auto& [w, c] : x.terms()) {
        ElementQ prod = ElementQ::scalar(c, 3);
        for (size_t i = 0; i < w.size(); ++i) prod = prod * generator_bivector(w[i], conv);
        out += prod;
    }
    return out;
}

inline ElementQ embed_generators(const PBWElement& x, GeneratorConvention conv = GeneratorConvention::weak) {
    return embed_generators(x.as_free(), conv);
}

// Inverse direction (weak convention): a bivector decomposes over the wedge
// basis and maps to a degree-1 combination of generator letters.
inline ElementQ bivector_to_generators(const ElementQ& x) {
    if (x.dim() != 3) throw std::invalid_argument("bivector_to_generators: expected dimension 3");
    if (!x.is_zero() && !x.is_homogeneous(2))
        throw std::invalid_argument("bivector_to_generators: expected a homogeneous bivector");
    if (antisymmetrize(x, 2) != x)
        throw std::invalid_argument("bivector_to_generators: input is not antisymmetric");
    ElementQ out(3);
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            Rational c = Rational(2) * x.coefficient(Word{a, b});  // blade coordinate
            if (c.is_zero()) continue;
            for (int p = 1; p <= 3; ++p) {
                int eps = epsilon(a, b, p);
                if (eps == 0) continue;
                out += (c * Rational(eps)) * ElementQ::basis_vector(p, 3);
            }
        }
    return out;
}

// Both directions of the generator/bivector dictionary over (E, delta).
struct BivectorTransform {
    GeneratorConvention convention = GeneratorConvention::weak;

    ElementQ generator(int p) const { return generator_bivector(p, convention); }
    ElementQ to_vector_words(const ElementQ& gens) const { return embed_generators(gens, convention); }
    ElementQ to_generators(const ElementQ& bivec) const {
        if (convention != GeneratorConvention::weak)
            throw std::logic_error("inverse transform is defined for the weak convention");
        return bivector_to_generators(bivec);
    }
};

}  // namespace spinclif
