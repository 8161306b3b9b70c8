#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dessin/census.hpp>
#include <dessin/dessin.hpp>
#include <dessin/error.hpp>

#include <vector>

using dessin::Dessin;
using dessin::Permutation;

TEST_CASE("construction derives phi and checks transitivity") {
  auto sigma = Permutation::from_cycles(5, {{2, 3, 4}});
  auto alpha = Permutation::from_cycles(5, {{1, 2}, {3, 5, 4}});
  Dessin d(sigma, alpha);
  CHECK(d.size() == 5);
  CHECK(d.phi() == Permutation::from_cycles(5, {{1, 4, 5, 2}}));
  // sigma alpha phi = id
  CHECK(dessin::compose(dessin::compose(d.sigma(), d.alpha()), d.phi()).is_identity());

  CHECK_THROWS_AS(Dessin(Permutation::from_cycles(4, {{1, 2}}),
                         Permutation::from_cycles(4, {{3, 4}})),
                  dessin::NotTransitiveError);
  CHECK_THROWS_AS(Dessin(Permutation(3), Permutation(4)), dessin::Error);
}

TEST_CASE("passports of named dessins") {
  auto d11 = dessin::demo11();
  auto p = d11.passport();
  CHECK(p.black_degrees == std::vector<int>{5, 2, 2, 1, 1});
  CHECK(p.white_degrees == std::vector<int>{3, 3, 2, 2, 1});
  CHECK(p.face_degrees == std::vector<int>{8, 2, 1});
  CHECK(p.genus == 0);
  CHECK(p.to_string() == "black [5 2 2 1 1] white [3 3 2 2 1] faces [8 2 1] genus 0");

  auto d12 = dessin::demo12();
  auto q = d12.passport();
  CHECK(q.black_degrees == std::vector<int>{5, 2, 2, 1, 1, 1});
  CHECK(q.white_degrees == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(q.face_degrees == std::vector<int>{9, 2, 1});
  CHECK(q.genus == 0);
  CHECK(d12.phi() == Permutation::from_cycles(
                         12, {{1, 12, 5, 3, 8, 6, 2, 11, 10}, {7, 9}}));

  Dessin trivial(Permutation(1), Permutation(1));
  auto t = trivial.passport();
  CHECK(t.black_degrees == std::vector<int>{1});
  CHECK(t.white_degrees == std::vector<int>{1});
  CHECK(t.face_degrees == std::vector<int>{1});
  CHECK(t.genus == 0);
}

TEST_CASE("torus example has genus one") {
  // sigma = (1 2 3 4), alpha = (1 3)(2 4): one black, two whites, one face
  Dessin d(Permutation::from_cycles(4, {{1, 2, 3, 4}}),
           Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  CHECK(d.passport().genus == 1);
}

TEST_CASE("dual swaps black and face data and is an involution") {
  for (auto d : {dessin::demo11(), dessin::demo12(), dessin::polygon(4)}) {
    auto dd = dessin::dual(d);
    CHECK(dd.sigma() == d.phi().inverse());
    CHECK(dd.alpha() == d.alpha().inverse());
    CHECK(dessin::dual(dd) == d);
    auto p = d.passport();
    auto q = dd.passport();
    CHECK(q.black_degrees == p.face_degrees);
    CHECK(q.face_degrees == p.black_degrees);
    CHECK(q.white_degrees == p.white_degrees);
    CHECK(q.genus == p.genus);
  }
}

TEST_CASE("mirror is an involution") {
  for (auto d : {dessin::demo11(), dessin::demo12(), dessin::star(3)}) {
    auto m = dessin::mirror(d);
    CHECK(m.sigma() == d.sigma().inverse());
    CHECK(m.alpha() == d.alpha().inverse());
    CHECK(dessin::mirror(m) == d);
    // mirror preserves the passport
    CHECK(m.passport() == d.passport());
  }
}

TEST_CASE("oriented dual is mirror of dual, and is not an involution in general") {
  auto d = dessin::demo12();
  auto od = dessin::oriented_dual(d);
  CHECK(od == dessin::mirror(dessin::dual(d)));
  CHECK(dessin::oriented_dual(od) != d);
}

TEST_CASE("self-dual linear chains") {
  for (int n = 2; n <= 8; ++n) {
    auto d = dessin::nakayama(n);
    CHECK(dessin::dual(d) == d);
    CHECK(dessin::mirror(dessin::oriented_dual(d)) == dessin::dual(d));
  }
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(dessin::nakayama(1), dessin::Error);
  CHECK_THROWS_AS(dessin::polygon(2), dessin::Error);
  CHECK_THROWS_AS(dessin::star(0), dessin::Error);
  CHECK(dessin::star(1).size() == 1);
  CHECK(dessin::polygon(3).size() == 6);
  CHECK(dessin::nakayama(4).size() == 4);
}

TEST_CASE("isomorphism detects relabellings and rejects different maps") {
  auto d = dessin::demo12();
  auto g = Permutation::from_cycles(12, {{1, 2}, {6, 8}});
  Dessin relabel(dessin::conjugate(d.sigma(), g), dessin::conjugate(d.alpha(), g));
  CHECK(dessin::is_isomorphic(d, relabel));
  CHECK(dessin::is_isomorphic(relabel, d));

  // canonical forms agree for a relabelled pair of manageable degree
  auto e = dessin::nakayama(5);
  auto h = Permutation::from_cycles(5, {{1, 5}, {2, 3}});
  Dessin e2(dessin::conjugate(e.sigma(), h), dessin::conjugate(e.alpha(), h));
  CHECK(dessin::canonical_form(e) == dessin::canonical_form(e2));

  CHECK_FALSE(dessin::is_isomorphic(dessin::nakayama(3), dessin::star(3)));
  CHECK_FALSE(dessin::is_isomorphic(d, dessin::demo11()));
  CHECK(dessin::is_isomorphic(d, d));
}

TEST_CASE("canonical form is a fixed point and conjugation-invariant") {
  // the whole-group scan is meant for enumeration degrees, so keep n small
  std::vector<Dessin> samples = {dessin::polygon(3), dessin::nakayama(4), dessin::star(5)};
  for (const auto& d : samples) {
    auto c = dessin::canonical_form(d);
    CHECK(dessin::canonical_form(c) == c);
    CHECK(dessin::is_isomorphic(c, d));
  }
  // every conjugate of a small dessin lands on the same canonical form
  auto d = dessin::star(3);
  auto base = dessin::canonical_form(d);
  std::vector<int> perm = {1, 2, 3};
  do {
    std::vector<std::vector<int>> one_cycle;  // build g from the image vector
    auto g = Permutation::from_image(perm);
    Dessin c(dessin::conjugate(d.sigma(), g), dessin::conjugate(d.alpha(), g));
    CHECK(dessin::canonical_form(c) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("dessin ordering and equality") {
  auto a = dessin::nakayama(3);
  auto b = dessin::star(3);
  CHECK(a != b);
  CHECK((a < b || b < a));
  CHECK_FALSE(a < a);
}
