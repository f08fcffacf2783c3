#include "fqrigid/drinfeldian.hpp"

namespace fqrigid {

DrinfeldianDomain::DrinfeldianDomain(CurveModel curve, Place point, const Limits& limits)
    : curve_(std::move(curve)), point_(std::move(point)) {
  if (!place_on_curve(curve_, point_, limits))
    throw InvalidInput("place " + point_.to_string() + " does not lie on " + curve_.equation());
}

ClassGroupReport class_group_of_domain(const DrinfeldianDomain& domain, const Limits& limits) {
  ClassGroupReport r;
  r.h_K = class_number(domain.curve(), limits);
  r.deg_x = domain.point().degree;
  // A degree-zero divisor supported on the single point x is zero, so D1
  // is trivial; the cokernel D2 is cyclic of order deg x.
  r.d1_order = 1;
  r.d2_order = r.deg_x;
  r.h_B = r.h_K * r.deg_x;
  return r;
}

bool is_uniformizationally_rigid(const DrinfeldianDomain& domain, const Limits& limits) {
  return class_group_of_domain(domain, limits).h_B == 1;
}

}  // namespace fqrigid
