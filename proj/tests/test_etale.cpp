#include <doctest.h>

#include "ctop/etale.hpp"

#include "fixtures.hpp"

using namespace ctop;
using namespace ctop::fixtures;

TEST_CASE("identity etale spaces validate") {
  CHECK(check_etale(etale_identity(rel_sierp())).ok());
  CHECK(check_etale(etale_identity(rel_flat(3))).ok());
  CHECK(check_etale(etale_identity(rel_powerset2())).ok());
}

TEST_CASE("one chart cannot cover a two-point fiber") {
  // Two discrete points over one base point with a single all-covering
  // chart: its restriction is not injective.
  EtaleInstance e;
  e.total_space = rel_flat(2);
  e.base_space = rel_one_point();
  e.p_table = {0, 0};
  SectionChart chart;
  chart.total_open = {0, 1};
  chart.base_open = {0};
  chart.section[0] = 0;
  e.charts = {chart};
  const Report rep = check_etale(e);
  bool left_inverse = false;
  for (const Finding& f : rep.findings)
    if (f.rule == "etale.section-left-inverse") left_inverse = true;
  CHECK(left_inverse);
}

TEST_CASE("coverage violations are reported") {
  EtaleInstance e = etale_identity(rel_flat(2));
  e.charts[0].total_open = {0};
  e.charts[0].base_open = {0};
  e.charts[0].section = {{0, 0}};
  const Report rep = check_etale(e);
  bool coverage = false;
  for (const Finding& f : rep.findings)
    if (f.rule == "etale.coverage") coverage = true;
  CHECK(coverage);
}

TEST_CASE("section tables must match their base opens") {
  EtaleInstance e = etale_identity(rel_flat(2));
  e.charts[0].section.erase(1);
  bool domain = false;
  for (const Finding& f : check_etale(e).findings)
    if (f.rule == "etale.section-domain") domain = true;
  CHECK(domain);
}

TEST_CASE("projection mismatches are reported") {
  EtaleInstance e = etale_identity(rel_flat(2));
  e.charts[0].section[0] = 1;
  e.charts[0].section[1] = 0;
  const Report rep = check_etale(e);
  bool right_inverse = false;
  for (const Finding& f : rep.findings)
    if (f.rule == "etale.section-right-inverse") right_inverse = true;
  CHECK(right_inverse);
}

TEST_CASE("chart location takes the least chart") {
  const EtaleInstance id = etale_identity(rel_sierp());
  CHECK(locate_chart(id, 0) == 0);
  CHECK(locate_chart(id, 1) == 0);

  EtaleInstance doubled = id;
  doubled.charts.push_back(doubled.charts[0]);
  CHECK(locate_chart(doubled, 1) == 0);

  const ActionInstance swap = cset_z2_swap();
  CHECK(locate_chart(swap.etale, 0) == 0);
  CHECK(locate_chart(swap.etale, 1) == 1);
}

TEST_CASE("section equality via membership matches direct equality") {
  EtaleInstance doubled = etale_identity(rel_sierp());
  doubled.charts.push_back(doubled.charts[0]);
  CHECK(section_equality(doubled, 0, 0, 0));
  CHECK(section_equality(doubled, 0, 0, 1));
  CHECK(section_equality(doubled, 1, 0, 1));

  const ActionInstance swap = cset_z2_swap();
  CHECK_FALSE(section_equality(swap.etale, 0, 0, 1));
  CHECK(section_equality(swap.etale, 0, 1, 1));
  CHECK_THROWS_AS(section_equality(swap.etale, 1, 0, 1), input_error);
}

TEST_CASE("section equality and membership agree across whole fixtures") {
  CHECK(check_section_membership(etale_identity(rel_sierp())).ok());
  CHECK(check_section_membership(etale_identity(rel_powerset2())).ok());
  CHECK(check_section_membership(cset_z2_swap().etale).ok());
  CHECK(check_section_membership(cset_z2_swap_redundant().etale).ok());
}

TEST_CASE("trivial actions of discrete categories validate") {
  CHECK(check_action(cset_trivial(rel_sierp())).ok());
  CHECK(check_action(cset_trivial(rel_flat(2))).ok());
}

TEST_CASE("the group swap action validates and is involutive") {
  const ActionInstance a = cset_z2_swap();
  CHECK(check_action(a).ok());
  CHECK(check_action(cset_z2_swap_redundant()).ok());
  // s.(s.x) = x on both points
  for (Nat x = 0; x < 2; ++x)
    CHECK(a.act_table.at({1, a.act_table.at({1, x})}) == x);
}

TEST_CASE("action condition violations are reported") {
  ActionInstance a = cset_z2_swap();
  a.act_table[{0, 0}] = 1;  // identity must fix the fiber
  bool cond2 = false;
  for (const Finding& f : check_action(a).findings)
    if (f.rule == "action.cond2") cond2 = true;
  CHECK(cond2);

  ActionInstance b = cset_z2_swap();
  b.act_table[{1, 1}] = 1;  // s is no longer an involution: s*s = e fails at 1
  bool cond3 = false;
  for (const Finding& f : check_action(b).findings)
    if (f.rule == "action.cond3") cond3 = true;
  CHECK(cond3);

  ActionInstance c = cset_z2_swap();
  c.act_table.erase({1, 1});
  CHECK_THROWS_AS(check_action(c), input_error);
}

TEST_CASE("fibers are preserved by every action") {
  const ActionInstance fixtures_list[] = {cset_trivial(rel_sierp()), cset_z2_swap(),
                                          cset_z2_swap_redundant()};
  for (const ActionInstance& a : fixtures_list)
    for (const auto& [fx, y] : a.act_table)
      CHECK(a.etale.p_table[static_cast<std::size_t>(y)] ==
            a.category.tar_table[static_cast<std::size_t>(fx.first)]);
}

TEST_CASE("identity maps are equivariant") {
  CHECK(check_equivariant(equivariant_identity(cset_z2_swap())).ok());
  CHECK(check_equivariant(equivariant_identity(cset_trivial(rel_sierp()))).ok());
}

TEST_CASE("equivariance violations are reported") {
  const ActionInstance swap = cset_z2_swap();
  // Swapping the fiber points commutes with the group action.
  EquivariantMapInstance cross{swap, swap, {1, 0}};
  CHECK(check_equivariant(cross).ok());

  // Squashing both points onto one does not.
  EquivariantMapInstance squash{swap, swap, {0, 0}};
  bool commutes = false;
  for (const Finding& f : check_equivariant(squash).findings)
    if (f.rule == "equivariant.commutes") commutes = true;
  CHECK(commutes);

  // A fiber-moving table on the trivial two-point discrete base.
  const ActionInstance trivial = cset_trivial(rel_flat(2));
  EquivariantMapInstance moved{trivial, trivial, {1, 0}};
  bool fiber = false;
  for (const Finding& f : check_equivariant(moved).findings)
    if (f.rule == "equivariant.fiber") fiber = true;
  CHECK(fiber);
}
