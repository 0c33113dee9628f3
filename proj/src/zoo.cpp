#include "zipdata/zoo.hpp"

#include <memory>
#include <utility>

namespace zipdata {

namespace {

using Images = PermutationGroup::Images;

std::shared_ptr<const Homomorphism> shared(Homomorphism h) {
  return std::make_shared<const Homomorphism>(std::move(h));
}

Subgroup generated_by(const GroupPtr& g, std::initializer_list<std::string_view> literals) {
  std::vector<Elem> gens;
  for (auto text : literals) gens.push_back(g->parse(text));
  return closure(g, gens);
}

// g -> t if g is odd, identity otherwise
Homomorphism sign_into(const std::shared_ptr<const PermutationGroup>& s, Elem t) {
  return Homomorphism::from_function(s, s, [&](Elem a) {
    auto im = s->images(a);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < im.size(); ++i)
      for (std::size_t j = i + 1; j < im.size(); ++j) inversions += im[i] > im[j];
    return inversions % 2 ? t : s->identity();
  });
}

ZipDatum restricted(Subgroup e, Subgroup g, Homomorphism tau, Homomorphism sigma, Elem twist) {
  return ZipDatum(std::move(e), std::move(g), shared(std::move(tau)), shared(std::move(sigma)), twist);
}

}  // namespace

std::vector<ZooEntry> build_small_zoo() {
  std::vector<ZooEntry> zoo;
  auto s3 = PermutationGroup::symmetric(3);
  auto s4 = PermutationGroup::symmetric(4);

  {
    auto one = CayleyGroup::create({{0}});
    zoo.push_back({"trivial-e", "E trivial, G = S3",
                   ZipDatum::from_homomorphisms(Homomorphism::trivial(one, s3),
                                                Homomorphism::trivial(one, s3))});
  }
  zoo.push_back({"tau-surjective", "E = G = S3, tau = id, sigma = sign into <(1,2)>",
                 ZipDatum::from_homomorphisms(Homomorphism::identity(s3),
                                              sign_into(s3, s3->parse("(1,2)")))});
  zoo.push_back({"s3-subgroup-inclusion", "E = <(1,2)> in G = S3, tau = sigma = inclusion",
                 restricted(generated_by(s3, {"(1,2)"}), Subgroup::whole(s3),
                            Homomorphism::identity(s3), Homomorphism::identity(s3),
                            s3->identity())});
  zoo.push_back({"s4-s3-inclusion", "E = S3 in G = S4, tau = sigma = inclusion",
                 restricted(generated_by(s4, {"(1,2)", "(1,2,3)"}), Subgroup::whole(s4),
                            Homomorphism::identity(s4), Homomorphism::identity(s4),
                            s4->identity())});
  zoo.push_back({"a4-twisted-inclusion", "E = A4 in G = S4, tau = inclusion, sigma twisted by (1,2)",
                 restricted(generated_by(s4, {"(1,2,3)", "(2,3,4)"}), Subgroup::whole(s4),
                            Homomorphism::identity(s4), Homomorphism::identity(s4),
                            s4->parse("(1,2)"))});
  {
    auto c2cubed = PermutationGroup::generated(
        6, {PermutationGroup::parse_cycles("(1,2)", 6), PermutationGroup::parse_cycles("(3,4)", 6),
            PermutationGroup::parse_cycles("(5,6)", 6)});
    const Elem a = c2cubed->parse("(1,2)"), b = c2cubed->parse("(3,4)"), c = c2cubed->parse("(5,6)");
    const std::pair<Elem, Elem> drop_last[] = {{a, a}, {b, b}, {c, c2cubed->identity()}};
    zoo.push_back({"c2cubed-endomorphism", "E = G = C2^3, tau = id, sigma = projection onto C2^2",
                   ZipDatum::from_homomorphisms(
                       Homomorphism::identity(c2cubed),
                       Homomorphism::from_generator_images(c2cubed, c2cubed, drop_last))});
    zoo.push_back({"c2cubed-projection-tau", "E = G = C2^3, tau = projection onto C2^2, sigma = id",
                   ZipDatum::from_homomorphisms(
                       Homomorphism::from_generator_images(c2cubed, c2cubed, drop_last),
                       Homomorphism::identity(c2cubed))});
  }
  zoo.push_back({"s4-sign-endomorphism", "E = G = S4, tau = id, sigma = sign into <(1,2)>",
                 ZipDatum::from_homomorphisms(Homomorphism::identity(s4),
                                              sign_into(s4, s4->parse("(1,2)")))});
  zoo.push_back({"s4-sign-tau", "E = G = S4, tau = sign into <(1,2)>, sigma = id",
                 ZipDatum::from_homomorphisms(sign_into(s4, s4->parse("(1,2)")),
                                              Homomorphism::identity(s4))});
  {
    auto gl = MatrixGroup::general_linear(2, 2);
    Subgroup borel = Subgroup::trusted(gl, [&] {
      std::vector<Elem> m;
      for (Elem a = 0; a < gl->order(); ++a)
        if (gl->entries(a)[2] == 0) m.push_back(a);
      return m;
    }());
    zoo.push_back({"borel-gl2f2", "E = upper Borel in G = GL2(F2), tau = sigma = inclusion",
                   restricted(borel, Subgroup::whole(gl), Homomorphism::identity(gl),
                              Homomorphism::identity(gl), gl->identity())});
    auto transpose_inverse = Homomorphism::from_function(gl, gl, [&](Elem a) {
      auto e = gl->entries(gl->inv(a));
      return *gl->find(std::vector<std::int64_t>{e[0], e[2], e[1], e[3]});
    });
    zoo.push_back({"borel-opposite-gl2f2",
                   "E = upper Borel in G = GL2(F2), tau = inclusion, sigma = transpose-inverse",
                   restricted(borel, Subgroup::whole(gl), Homomorphism::identity(gl),
                              std::move(transpose_inverse), gl->identity())});
  }
  {
    std::vector<std::vector<Elem>> table(4, std::vector<Elem>(4));
    for (Elem i = 0; i < 4; ++i)
      for (Elem j = 0; j < 4; ++j) table[i][j] = (i + j) % 4;
    auto c4 = CayleyGroup::create(table);
    zoo.push_back({"c4-doubling", "E = G = Z/4 as a Cayley table, tau = doubling, sigma = id",
                   ZipDatum::from_homomorphisms(
                       Homomorphism::from_function(c4, c4, [](Elem a) { return (2 * a) % 4; }),
                       Homomorphism::identity(c4))});
  }
  return zoo;
}

std::vector<std::string> zoo_names() {
  std::vector<std::string> names;
  for (const auto& entry : build_small_zoo()) names.push_back(entry.name);
  return names;
}

std::optional<ZooEntry> find_zoo_entry(std::string_view name) {
  for (auto& entry : build_small_zoo())
    if (entry.name == name) return std::move(entry);
  return std::nullopt;
}

}  // namespace zipdata
