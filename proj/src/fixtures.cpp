#include "vlab/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "vlab/errors.hpp"
#include "vlab/named_groups.hpp"

namespace vlab {

namespace {

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? p : p - start)));
    if (p == std::string_view::npos)
      return out;
    start = p + 1;
  }
}

char const *kind_name(Fixture::Kind k)
{
  switch (k) {
  case Fixture::Kind::known_epi: return "known-epi";
  case Fixture::Kind::known_member: return "known-member";
  case Fixture::Kind::known_nonmember: return "known-nonmember";
  }
  return "?";
}

constexpr char const *bundled_text = R"(# Facts consumed by the engine, never derived by it.
known-epi    | A4 -> A5 | var:A5 | B.H. Neumann, Example A: A4 is epimorphically embedded in A5 within var(A5)
known-member | A5       | var:A5 | A5 generates var(A5)
)";

} // namespace

std::string Fixture::to_string() const
{
  std::string names = kind == Kind::known_epi ? subgroup + " -> " + group : group;
  return std::string(kind_name(kind)) + " | " + names + " | " + variety.to_string() + " | " +
         provenance;
}

FixtureSet FixtureSet::bundled()
{
  static FixtureSet const set = parse(bundled_text);
  return set;
}

FixtureSet FixtureSet::parse(std::string_view text)
{
  FixtureSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    auto fail = [&](std::string const &msg) -> ParseError {
      return ParseError("fixture line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    auto fields = split(t, '|');
    if (fields.size() != 4)
      throw fail("expected 4 '|'-separated fields, got " + std::to_string(fields.size()));
    Fixture f{Fixture::Kind::known_member, {}, {}, VarietyDescriptor::abelian(), fields[3]};
    if (fields[0] == "known-epi")
      f.kind = Fixture::Kind::known_epi;
    else if (fields[0] == "known-member")
      f.kind = Fixture::Kind::known_member;
    else if (fields[0] == "known-nonmember")
      f.kind = Fixture::Kind::known_nonmember;
    else
      throw fail("unknown fixture kind '" + fields[0] + "'");
    if (f.kind == Fixture::Kind::known_epi) {
      auto arrow = fields[1].find("->");
      if (arrow == std::string::npos)
        throw fail("known-epi needs 'H -> G'");
      f.subgroup = trim(std::string_view(fields[1]).substr(0, arrow));
      f.group = trim(std::string_view(fields[1]).substr(arrow + 2));
      if (f.subgroup.empty())
        throw fail("missing subgroup name");
    } else {
      f.group = fields[1];
    }
    if (f.group.empty())
      throw fail("missing group name");
    try {
      named_group(f.group);
      if (!f.subgroup.empty())
        named_group(f.subgroup);
      f.variety = VarietyDescriptor::parse(fields[2]);
    } catch (ParseError const &e) {
      throw fail(e.what());
    }
    if (f.provenance.empty())
      throw fail("missing provenance");
    set.add(std::move(f));
  }
  return set;
}

FixtureSet FixtureSet::load(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open fixture file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void FixtureSet::add(Fixture f)
{
  _fixtures.push_back(std::move(f));
}

Fixture const *FixtureSet::find_epi(PermutationGroup const &g, PermutationGroup const &h,
                                    VarietyDescriptor const &desc, Budget const &budget) const
{
  for (auto const &f : _fixtures) {
    if (f.kind != Fixture::Kind::known_epi || !(f.variety == desc))
      continue;
    if (!matches_named(g, f.group))
      continue;
    auto k = named_group(f.subgroup);
    if (k.degree() > g.degree())
      continue;
    if (conjugate_in(g, h, k.extended(g.degree()), budget))
      return &f;
  }
  return nullptr;
}

Fixture const *FixtureSet::find_membership(PermutationGroup const &g,
                                           VarietyDescriptor const &desc) const
{
  for (auto const &f : _fixtures) {
    if (f.kind == Fixture::Kind::known_epi || !(f.variety == desc))
      continue;
    if (matches_named(g, f.group))
      return &f;
  }
  return nullptr;
}

bool matches_named(PermutationGroup const &g, std::string const &name)
{
  PermutationGroup n;
  try {
    n = named_group(name);
  } catch (ParseError const &) {
    return false;
  }
  if (n.degree() > g.degree())
    return false;
  return g == n.extended(g.degree());
}

bool conjugate_in(PermutationGroup const &g, PermutationGroup const &h, PermutationGroup const &k,
                  Budget const &budget)
{
  if (h.order() != k.order())
    return false;
  if (h == k)
    return true;
  for (auto const &x : g.elements(budget)) {
    bool inside = true;
    for (auto const &y : h.generators()) {
      if (!k.contains(y ^ x)) {
        inside = false;
        break;
      }
    }
    if (inside)
      return true;
  }
  return false;
}

} // namespace vlab
