#include "bosebounds/exact.hpp"

#include <cmath>

#include "bosebounds/errors.hpp"

namespace bosebounds {

void HydrogenicProblem::validate() const {
  if (!(effective_mass > 0.0)) throw InvalidArgument("effective mass must be > 0");
  if (!(attraction > 0.0)) throw InvalidArgument("attraction strength must be > 0");
}

double hydrogenic_energy(const HydrogenicProblem& pb) {
  pb.validate();
  return -0.5 * pb.effective_mass * pb.attraction * pb.attraction;
}

HydrogenicProblem reduce_two_body_intrinsic() { return {0.5, 1.0}; }

double intrinsic_two_body_energy() { return hydrogenic_energy(reduce_two_body_intrinsic()); }

double fixed_grain_one_body_energy() { return hydrogenic_energy({1.0, 1.0}); }

SystemSpec two_newt_seed(double beta) {
  if (!(beta > 0.0)) throw InvalidArgument("mass ratio beta must be > 0");
  SystemSpec spec;
  spec.family = Family::newton_fixed_grain;
  spec.n = 2;
  spec.beta = 2.0 * beta;  // m / (M/2)
  spec.gravity_scale = 2.0;
  return spec;
}

}  // namespace bosebounds
