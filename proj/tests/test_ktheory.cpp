#include <doctest.h>

#include <random>

#include "leavitt/graph_matrices.hpp"
#include "leavitt/kreport.hpp"
#include "leavitt/verify.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {

Quiver loops(int k) {
  std::vector<Quiver::Edge> edges(k, {0, 0});
  return Quiver({"v"}, std::move(edges));
}

IntMatrix single(long long x) {
  IntMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

const char* kIntegersTable =
    "mode: K\nflags: pid\ndefault-: 0\n"
    "-1: 0\n0: Z\n1: Z/2\n2: Z/2\n3: Z/48\n4: 0\n5: Z\n";

const char* kF5Table =
    "mode: K\nflags: field\ndefault-: 0\n"
    "0: Z\n1: Z/4\n2: 0\n3: Z/24\n4: 0\n5: Z/124\n";

}  // namespace

TEST_CASE("parse_ktable: directives and flags") {
  KTable t = parse_ktable(
      "# coefficients\n"
      "mode: K\n"
      "flags: pid, regular-supercoherent\n"
      "default-: 0\n"
      "default+: repeat-2\n"
      "0: Z\n"
      "1: sym:k*\n");
  CHECK(t.mode == KMode::K);
  CHECK(t.min_degree() == 0);
  CHECK(t.max_degree() == 1);
  CHECK(t.has_flag(TableFlag::Pid));
  CHECK(t.has_flag(TableFlag::RegularSupercoherent));
  CHECK_FALSE(t.has_flag(TableFlag::Field));
  CHECK(std::holds_alternative<SymbolicGroup>(t.entries.at(1)));
  CHECK(render(t.entries.at(1)) == "k*");
}

TEST_CASE("parse_ktable: flag implications") {
  KTable complex = parse_ktable("mode: K\nflags: complex\n0: Z\n");
  CHECK(complex.has_flag(TableFlag::Complex));
  CHECK(complex.has_flag(TableFlag::Field));
  CHECK(complex.has_flag(TableFlag::Pid));
  CHECK(complex.has_flag(TableFlag::RegularSupercoherent));
  CHECK_FALSE(complex.has_flag(TableFlag::StableCstar));
  KTable field = parse_ktable("mode: K\nflags: field\n0: Z\n");
  CHECK_FALSE(field.has_flag(TableFlag::Complex));
  CHECK(field.has_flag(TableFlag::Pid));
  KTable pid = parse_ktable("mode: K\nflags: pid\n0: Z\n");
  CHECK(pid.has_flag(TableFlag::RegularSupercoherent));
  CHECK_FALSE(pid.has_flag(TableFlag::Field));
}

TEST_CASE("parse_ktable: rejects malformed input") {
  CHECK_THROWS_AS(parse_ktable(""), ParseError);                       // empty
  CHECK_THROWS_AS(parse_ktable("0: Z\n"), ParseError);                 // no mode
  CHECK_THROWS_AS(parse_ktable("mode: K\n"), ParseError);              // no entries
  CHECK_THROWS_AS(parse_ktable("mode: Q\n0: Z\n"), ParseError);        // bad mode
  CHECK_THROWS_AS(parse_ktable("mode: K\nmode: K\n0: Z\n"), ParseError);
  CHECK_THROWS_AS(parse_ktable("mode: K\n0: Z\n0: Z\n"), ParseError);  // dup degree
  CHECK_THROWS_AS(parse_ktable("mode: K\nwhat: Z\n"), ParseError);     // bad key
  CHECK_THROWS_AS(parse_ktable("mode: K\nflags: odd\n0: Z\n"), ParseError);
  CHECK_THROWS_AS(parse_ktable("mode: K\ndefault-: 1\n0: Z\n"), ParseError);
  CHECK_THROWS_AS(parse_ktable("mode: K\n0: Frac\n"), ParseError);     // bad group
  CHECK_THROWS_AS(parse_ktable("mode: K\n0: sym:\n"), ParseError);     // empty name
  CHECK_THROWS_AS(parse_ktable("mode: K\njust text\n"), ParseError);   // no colon
}

TEST_CASE("KTable::at: entries, gaps, default rules") {
  KTable t = parse_ktable("mode: K\ndefault-: 0\ndefault+: repeat-2\n0: Z\n1: Z/2\n");
  CHECK_FALSE(t.at(0).defaulted);
  CHECK(render(t.at(0).value) == "Z");
  // Below: the zero rule.
  CHECK(t.at(-4).defaulted);
  CHECK(is_zero(t.at(-4).value));
  // Above: repeat with period two, parity preserved.
  CHECK(t.at(4).defaulted);
  CHECK(render(t.at(4).value) == "Z");
  CHECK(render(t.at(5).value) == "Z/2");

  KTable gap = parse_ktable("mode: K\n0: Z\n2: Z\n");
  CHECK_THROWS_AS(gap.at(1), KTableError);
  KTable bare = parse_ktable("mode: K\n0: Z\n");
  CHECK_THROWS_AS(bare.at(1), KTableError);
  CHECK_THROWS_AS(bare.at(-1), KTableError);
}

TEST_CASE("parse_ktable: Ktop periodicity") {
  KTable t = parse_ktable("mode: Ktop\n0: Z\n1: 0\n");
  // Both default rules switch on automatically.
  CHECK(t.below == KTable::DefaultRule::Repeat2);
  CHECK(t.above == KTable::DefaultRule::Repeat2);
  CHECK(render(t.at(-2).value) == "Z");
  CHECK(render(t.at(7).value) == "0");
  // An explicit even-degree repeat is fine as long as it agrees.
  CHECK_NOTHROW(parse_ktable("mode: Ktop\n0: Z\n1: 0\n2: Z\n"));
  // Violations: non-periodic entries, or a non-repeat rule.
  CHECK_THROWS_AS(parse_ktable("mode: Ktop\n0: Z\n1: 0\n2: Z/2\n"), ParseError);
  CHECK_THROWS_AS(parse_ktable("mode: Ktop\ndefault-: 0\n0: Z\n1: 0\n"), ParseError);
}

TEST_CASE("coker_ker: fixed shapes") {
  auto z = FgAbGroup::free(1);
  {
    auto [ck, kr] = coker_ker(single(-3), z);
    CHECK(ck == FgAbGroup::cyclic(3));
    CHECK(kr.is_trivial());
  }
  {
    auto [ck, kr] = coker_ker(single(0), z);
    CHECK(ck == z);
    CHECK(kr == z);
  }
  {
    auto [ck, kr] = coker_ker(single(1), z);
    CHECK(ck.is_trivial());
    CHECK(kr.is_trivial());
  }
  {
    // 3x0: cokernel keeps all of g^3, kernel of the empty map is trivial.
    FgAbGroup g = FgAbGroup::from_orders(1, {Int(4)});
    auto [ck, kr] = coker_ker(IntMatrix(3, 0), g);
    CHECK(ck == g.power(3));
    CHECK(kr.is_trivial());
  }
  {
    auto [ck, kr] = coker_ker(IntMatrix(0, 2), FgAbGroup::cyclic(6));
    CHECK(ck.is_trivial());
    CHECK(kr == FgAbGroup::cyclic(6).power(2));
  }
  {
    // Multiplication by 2 on Z/4 coefficients: both pieces Z/2.
    auto [ck, kr] = coker_ker(single(2), FgAbGroup::cyclic(4));
    CHECK(ck == FgAbGroup::cyclic(2));
    CHECK(kr == FgAbGroup::cyclic(2));
  }
  CHECK_THROWS_AS(coker_ker_from_factors(2, 2, {Int(1)}, z), std::invalid_argument);
}

TEST_CASE("coker_ker: additive in the coefficient group") {
  std::mt19937_64 rng(60601);
  FgAbGroup g1 = FgAbGroup::from_orders(1, {Int(4)});
  FgAbGroup g2 = FgAbGroup::from_orders(0, {Int(6)});
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    CAPTURE(to_text(a));
    auto p1 = coker_ker(a, g1);
    auto p2 = coker_ker(a, g2);
    auto ps = coker_ker(a, g1.direct_sum(g2));
    CHECK(ps.first == p1.first.direct_sum(p2.first));
    CHECK(ps.second == p1.second.direct_sum(p2.second));
  }
}

TEST_CASE("coker_ker: exact match with enumeration over Z/m") {
  std::mt19937_64 rng(90210);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int b = static_cast<int>(rng() % 4);
    const int c = static_cast<int>(rng() % 4);
    IntMatrix a(b, c);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < c; ++j)
        a(i, j) = static_cast<long long>(rng() % 9) - 4;
    CAPTURE(to_text(a));
    for (int m : {2, 3, 4, 12}) {
      auto got = coker_ker(a, FgAbGroup::cyclic(m));
      auto want = oracle::enumerate_coker_ker_mod(a, m);
      CHECK(got.first == want.coker);
      CHECK(got.second == want.ker);
      ++compared;
    }
  }
  CHECK(compared == 240);
}

TEST_CASE("coker_ker: integral result reconciles with every finite reduction") {
  // Reducing the integral answer mod m must reproduce the enumerated groups:
  // tensoring for the cokernel, tensor plus torsion-product for the kernel
  // (the image of an integer matrix is free, so the sequence splits).
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int b = static_cast<int>(rng() % 4);
    const int c = static_cast<int>(rng() % 4);
    IntMatrix a(b, c);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < c; ++j)
        a(i, j) = static_cast<long long>(rng() % 9) - 4;
    CAPTURE(to_text(a));
    auto [ck_z, kr_z] = coker_ker(a, FgAbGroup::free(1));
    for (int m : {2, 3, 4, 5, 8, 9}) {
      auto want = oracle::enumerate_coker_ker_mod(a, m);
      CHECK(ck_z.tensor_mod(m) == want.coker);
      CHECK(kr_z.tensor_mod(m).direct_sum(ck_z.torsion_product_mod(m)) == want.ker);
    }
  }
}

TEST_CASE("coker_ker_symbolic") {
  SymbolicGroup base("k*");
  base.add_power(1);
  {
    auto [ck, kr] = coker_ker_symbolic(1, 1, {Int(3)}, base);
    CHECK(ck.render() == "k*/(k*)^3");
    CHECK(kr.is_unresolved());
    CHECK(kr.render() == "unresolved: kernel involves the 3-torsion of k*");
  }
  {
    auto [ck, kr] = coker_ker_symbolic(2, 3, {Int(1), Int(1)}, base);
    CHECK(ck.is_zero());
    CHECK(kr.render() == "k*");
  }
  {
    auto [ck, kr] = coker_ker_symbolic(1, 1, {Int(0)}, base);
    CHECK(ck.render() == "k*");
    CHECK(kr.render() == "k*");
  }
  {
    auto [ck, kr] = coker_ker_symbolic(3, 0, {}, base);
    CHECK(ck.render() == "(k*)^3");
    CHECK(kr.is_zero());
  }
  SymbolicGroup doubled("k*");
  doubled.add_power(2);
  CHECK_THROWS_AS(coker_ker_symbolic(1, 1, {Int(2)}, doubled), std::invalid_argument);
  SymbolicGroup bad("k*");
  bad.mark_unresolved("previous stage");
  CHECK_THROWS_AS(coker_ker_symbolic(1, 1, {Int(2)}, bad), std::invalid_argument);
  CHECK_THROWS_AS(coker_ker_symbolic(2, 2, {Int(1)}, base), std::invalid_argument);
}

TEST_CASE("k_groups: four loops over the field with five elements") {
  KReport r = k_groups(loops(4), parse_ktable(kF5Table), -1, 2);
  REQUIRE(r.degrees.size() == 4);
  CHECK(r.degrees[0].degree == -1);
  CHECK(*r.degrees[0].total_display == "0");
  CHECK(r.degrees[0].coker_defaulted);
  CHECK(*r.degrees[1].total_display == "Z/3");  // degree 0
  CHECK(*r.degrees[2].total_display == "0");    // degree 1
  CHECK(*r.degrees[3].total_display == "0");    // degree 2
  CHECK_FALSE(r.obstruction_note.has_value());
  for (const auto& row : r.degrees)
    CHECK(row.citations.front() == "Thm. rf-coh");

  KReport r7 = k_groups(loops(4), parse_ktable("mode: K\nflags: field\ndefault-: 0\n0: Z\n1: Z/6\n"), 1, 1);
  CHECK(*r7.degrees[0].total_display == "Z/3");
}

TEST_CASE("k_groups: four loops over the integers, all split statuses honest") {
  KReport r = k_groups(loops(4), parse_ktable(kIntegersTable), 0, 5);
  REQUIRE(r.degrees.size() == 6);
  const char* want_total[] = {"Z/3", "0", "0", "Z/3", "Z/3", "Z/3"};
  const char* want_status[] = {"split (ker free)", "split (ker free)",
                               "split (ker free)", "split (ker free)",
                               "split (coker zero)", "split (ker free)"};
  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(*r.degrees[i].total_display == want_total[i]);
    CHECK(r.degrees[i].split_status == want_status[i]);
  }
  // Degree 4 is carried entirely by the kernel piece of degree 3 coefficients.
  CHECK(render(r.degrees[4].coker_piece) == "0");
  CHECK(render(r.degrees[4].ker_piece) == "Z/3");
}

TEST_CASE("k_groups: split statuses and citations at degree one") {
  Quiver three = loops(3);  // transfer matrix [-2]
  const char* entries = "default-: 0\n0: Z/4\n1: Z/2\n";
  {
    KReport r = k_groups(three, parse_ktable(std::string("mode: K\nflags: pid\n") + entries), 1, 1);
    const DegreeReport& row = r.degrees[0];
    CHECK(render(row.coker_piece) == "Z/2");
    CHECK(render(row.ker_piece) == "Z/2");
    CHECK(row.split_status == "split (PID)");
    CHECK(*row.total_display == "Z/2 + Z/2");
    REQUIRE(row.citations.size() == 2);
    CHECK(row.citations[0] == "Thm. rf-coh");
    CHECK(row.citations[1] == "Cor. after Thm. rf-coh");
  }
  {
    // Without the PID hypothesis the same extension stays open.
    KReport r = k_groups(three, parse_ktable(std::string("mode: K\nflags: regular-supercoherent\n") + entries), 1, 1);
    const DegreeReport& row = r.degrees[0];
    CHECK(row.split_status == "unresolved-extension");
    CHECK_FALSE(row.total_display.has_value());
  }
  {
    // The PID splitting is specific to degree one.
    KReport r = k_groups(three, parse_ktable(std::string("mode: K\nflags: pid\ndefault+: repeat-2\n") + entries), 3, 3);
    CHECK(r.degrees[0].split_status == "unresolved-extension");
  }
}

TEST_CASE("k_groups: sink-only quiver tensors the table entries") {
  Quiver edgeless({"p", "q", "r"}, {});
  KReport r = k_groups(edgeless, parse_ktable(kIntegersTable), 0, 3);
  CHECK(*r.degrees[0].total_display == "Z^3");
  CHECK(*r.degrees[1].total_display == "Z/2 + Z/2 + Z/2");
  CHECK(*r.degrees[2].total_display == "Z/2 + Z/2 + Z/2");
  CHECK(*r.degrees[3].total_display == "Z/48 + Z/48 + Z/48");
  for (const auto& row : r.degrees) CHECK(row.split_status == "split (ker free)");
}

TEST_CASE("k_groups: mode only changes citations and notes") {
  const char* entries = "default-: 0\n0: Z\n1: Z/2\n";
  Quiver q = loops(2);
  KReport k = k_groups(q, parse_ktable(std::string("mode: K\nflags: regular-supercoherent\n") + entries), 0, 1);
  KReport kh = k_groups(q, parse_ktable(std::string("mode: KH\n") + entries), 0, 1);
  CHECK(same_group_data(k, kh));
  CHECK(k.degrees[0].citations == std::vector<std::string>{"Thm. rf-coh"});
  CHECK(kh.degrees[0].citations == std::vector<std::string>{"Thm. thm:kh"});
  CHECK_FALSE(k.obstruction_note.has_value());
  CHECK_FALSE(kh.obstruction_note.has_value());

  KReport bare = k_groups(q, parse_ktable(std::string("mode: K\n") + entries), 0, 1);
  CHECK(same_group_data(k, bare));
  CHECK(bare.degrees[0].citations == std::vector<std::string>{"Thm. row-finitecase"});
  REQUIRE(bare.obstruction_note.has_value());
  CHECK(bare.obstruction_note->find("NK-type") != std::string::npos);

  KReport stable = k_groups(q, parse_ktable(std::string("mode: K\nflags: stable-cstar\n") + entries), 0, 1);
  CHECK(stable.degrees[0].citations == std::vector<std::string>{"Cor. cor:stablereg"});
  CHECK_FALSE(stable.obstruction_note.has_value());
}

TEST_CASE("k_groups: Ktop tables are two-periodic in the output") {
  KTable t = parse_ktable("mode: Ktop\nflags: complex\n0: Z\n1: 0\n");
  KReport r = k_groups(loops(2), t, -2, 3);
  REQUIRE(r.degrees.size() == 6);
  for (const auto& row : r.degrees) {
    CHECK(row.citations == std::vector<std::string>{"Thm. thm:ktop"});
    // Same parity, same groups as the base rows at degrees 0 and 1.
    const DegreeReport& base = r.degrees[(row.degree % 2 + 2) % 2 + 2];
    CHECK(render(row.coker_piece) == render(base.coker_piece));
    CHECK(render(row.ker_piece) == render(base.ker_piece));
  }
  CHECK(r.degrees[0].coker_defaulted);   // degree -2
  CHECK_FALSE(r.degrees[2].coker_defaulted);  // degree 0
  CHECK(r.degrees[4].coker_defaulted);   // degree 2
}

TEST_CASE("k_groups: degree-range errors") {
  KTable t = parse_ktable(kF5Table);
  CHECK_THROWS_AS(k_groups(loops(4), t, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(k_groups(loops(4), t, 5, 6), KTableError);  // no default+ rule
}

TEST_CASE("k0_k1_pid") {
  {
    // Concrete unit group (field with five elements).
    KReport r = k0_k1_pid(loops(4), FgAbGroup::cyclic(4));
    REQUIRE(r.degrees.size() == 2);
    CHECK(*r.degrees[0].total_display == "Z/3");
    CHECK(r.degrees[0].citations == std::vector<std::string>{"Thm. rf-coh"});
    CHECK(*r.degrees[1].total_display == "0");
    CHECK(r.degrees[1].split_status == "split (PID)");
    CHECK(r.degrees[1].citations ==
          std::vector<std::string>{"Thm. rf-coh", "Cor. after Thm. rf-coh"});
  }
  {
    // Symbolic unit group of an unspecified field.
    SymbolicGroup units("k*");
    units.add_power(1);
    KReport r = k0_k1_pid(loops(4), units);
    CHECK(*r.degrees[0].total_display == "Z/3");
    CHECK(*r.degrees[1].total_display == "k*/(k*)^3");
  }
  {
    // A quiver with sinks: the kernel piece of degree one is free and splits.
    Quiver q = parse_quiver("vertices: a b\nedges:\na b 1\n");
    KReport r = k0_k1_pid(q, FgAbGroup::cyclic(4));
    // Transfer matrix is 2x1 with entries (0 - 1, 1 - 0): factors {1}.
    CHECK(*r.degrees[0].total_display == "Z");
    CHECK(*r.degrees[1].total_display == "Z/4");
  }
}

TEST_CASE("render_text") {
  KReport r = k_groups(loops(4), parse_ktable(kIntegersTable), 0, 1);
  CHECK(render_text(r, false) == "K0 = Z/3\nK1 = 0\n");
  CHECK(render_text(r, true) ==
        "K0 = Z/3  [Thm. rf-coh]\nK1 = 0  [Thm. rf-coh]\n");

  KReport open = k_groups(
      loops(3),
      parse_ktable("mode: K\nflags: regular-supercoherent\ndefault-: 0\n0: Z/4\n1: Z/2\n"),
      1, 1);
  CHECK(render_text(open, false) ==
        "K1: coker piece = Z/2, ker piece = Z/2 (extension unresolved)\n");

  KReport defaulted = k_groups(
      loops(2), parse_ktable("mode: K\ndefault-: 0\ndefault+: 0\n0: Z\n"), 1, 1);
  std::string text = render_text(defaulted, false);
  CHECK(text.find("[table default]") != std::string::npos);
  CHECK(text.find("note: ") != std::string::npos);

  // One isolated vertex: the transfer map is 1x0, so KH0 is the whole entry.
  KReport kh = k_groups(Quiver({"p"}, {}),
                        parse_ktable("mode: KH\ndefault-: 0\n0: Z\n1: 0\n"), 0, 0);
  CHECK(render_text(kh, false) == "KH0 = Z\n");
}
