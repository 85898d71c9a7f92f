// Generated by tests/oracles/generate_reference.py; do not edit by hand.
#ifndef ROBIN_TEST_REFERENCE_VALUES_HPP
#define ROBIN_TEST_REFERENCE_VALUES_HPP

#include "robin/numerics.hpp"

namespace robin::reference
{

inline const Complex gamma_2_3i{-0.082395272665611883674, 0.091774287435259314596};
inline const Complex gamma_m2p5_0p1i{-0.89650770119975877642, -0.099318350500568559142};
inline const Complex zeta_near_first_zero{1.767429841384903915e-8, -1.1102028930923116747e-7};
inline const Complex zeta_0p3_50i{-0.47797016836604675623, 0.30179894143408387803};
inline const Complex zeta_m3p5_2i{-0.0035609799649190723433, 0.042622537314776407267};
inline const Complex bessel_k0_1{0.42102443824070833334, 0.0};
inline const Complex bessel_k_1p8_2i_0p7{-0.92781671141106217938, -0.053506341314377045019};
inline const Complex bessel_k_0p3_10i_2pi{-4.8770992157615184223e-8, 2.135156836389934189e-8};
inline const Complex bessel_k_20_0p1{6.3768675266611785739e+42, 0.0};
inline const Complex phi_2p3{1.5031304575656902693, 0.0};
inline const Complex phi_0p75{-2.9315339954463304342, 0.0};
inline const Complex phi_0p5_3i{0.81030753643965055089, -0.58600486038010332754};
inline const Complex phi_0p4_5i{0.71692067054882937894, -0.72165644261153663696};
inline const Complex phi_conj_0p5_m3i{0.81030753643965055089, 0.58600486038010332754};
inline const Complex eisenstein_i_2{2.7842015453307912222, 0.0};
inline const Complex eisenstein_0p3_1p4i_2p3{3.1375055660448294892, 0.0};
inline const Complex fourier_a1_2p3{22.704285039711679998, 0.0};
inline const Complex fourier_a6_2p3{630.14053183345388664, 0.0};
inline const Complex gamma_of_2p3_eta2{-0.95147758285682566547, 0.0};
inline const Complex dirichlet_root_eta2{0.5, 1.7448994329129388191};
inline const Complex neumann_root_eta2{0.5, 4.2071624216727002126};
inline const Complex robin_root_gamma5_eta3{0.5, 3.7745445932447727775};
inline const Complex msr_pairing_1p5_eta2{8.7550451536675829309, 0.0};
inline const Complex msr_pairing_2p1i_eta1p5{2.1018282405822135883, -0.60370882246300010555};

} // namespace robin::reference

#endif
