#include "s3cover/selftest.hpp"

#include "s3cover/group_ring.hpp"
#include "s3cover/representation.hpp"

namespace s3cover {

SelfTestReport run_selftest() {
  SelfTestReport rep;
  auto check = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };

  const auto &k = constants();
  const GroupRingElement zero;
  const auto one = GroupRingElement::identity();
  const auto tau = GroupRingElement::basis(GroupElement::t);
  const auto sigma = GroupRingElement::basis(GroupElement::s);
  const auto sigma2 = GroupRingElement::basis(GroupElement::s2);

  const std::array<const GroupRingElement *, 3> central = {&k.e1, &k.e2, &k.e3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      check("e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1),
            *central[i] * *central[j] == (i == j ? *central[i] : zero));
  check("e1+e2+e3=e", k.e1 + k.e2 + k.e3 == one);
  check("e31+e32=e3", k.e31 + k.e32 == k.e3);
  check("e31*e31=e31", k.e31 * k.e31 == k.e31);
  check("e32*e32=e32", k.e32 * k.e32 == k.e32);
  check("e31*e32=0", (k.e31 * k.e32).is_zero());
  check("e32*e31=0", (k.e32 * k.e31).is_zero());
  check("t*e31=e32*t", tau * k.e31 == k.e32 * tau);
  check("s*e31=-t*e31", sigma * k.e31 == -tau * k.e31);
  check("s2*e31=(t-e)*e31", sigma2 * k.e31 == (tau - one) * k.e31);
  check("e1,e2,e3 central", is_central(k.e1) && is_central(k.e2) && is_central(k.e3));
  check("e31,e32 not central", !is_central(k.e31) && !is_central(k.e32));

  const auto &act = standard_action();
  const auto id = Matrix6::identity();
  check("S^3=I", act.sigma * act.sigma * act.sigma == id);
  check("T^2=I", act.tau * act.tau == id);
  check("TS=S^2T", act.tau * act.sigma == act.sigma * act.sigma * act.tau);

  const auto p1 = projector(k.e1), p2 = projector(k.e2), p3 = projector(k.e3);
  const auto p31 = projector(k.e31), p32 = projector(k.e32);
  check("ranks 1,1,4,2,2", p1.rank() == 1 && p2.rank() == 1 && p3.rank() == 4 &&
                               p31.rank() == 2 && p32.rank() == 2);
  check("projectors idempotent", p1 * p1 == p1 && p2 * p2 == p2 && p3 * p3 == p3 &&
                                     p31 * p31 == p31 && p32 * p32 == p32);
  check("P1+P2+P3=I", p1 + p2 + p3 == id);
  check("P31+P32=P3", p31 + p32 == p3);
  check("T P31 = P32 T", act.tau * p31 == p32 * act.tau);
  return rep;
}

} // namespace s3cover
