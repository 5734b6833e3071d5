#include "properties.hpp"

#include <doctest.h>

using namespace testsupport;

namespace {

void require_clean(const PropertyOutcome& o)
{
    INFO(o.name);
    CHECK(o.instances >= 100);
    CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("ring axioms") { require_clean(ring_axioms(120)); }
TEST_CASE("derivation rule") { require_clean(derivation_rule(120)); }
TEST_CASE("q-Pascal") { require_clean(q_pascal(100)); }
TEST_CASE("mod-p homomorphism") { require_clean(mod_p_homomorphism(120)); }
TEST_CASE("q-inverse pair") { require_clean(q_inverse_pair(120)); }
TEST_CASE("geometric inverse") { require_clean(geometric_inverse(120)); }
