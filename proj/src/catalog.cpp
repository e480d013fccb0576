#include "vlab/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vlab/errors.hpp"

namespace vlab {

extern char const *const bundled_catalog_text;

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

Permutation parse_images(std::string const &text, std::size_t degree, std::size_t line)
{
  if (text.size() < 2 || text.back() != ']')
    throw ParseError("unterminated image list '" + text + "'", line);
  std::istringstream in(text.substr(1, text.size() - 2));
  std::vector<Point> images;
  std::string tok;
  while (in >> tok) {
    if (!tok.empty() && tok.back() == ',')
      tok.pop_back();
    if (tok.empty())
      continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError("bad point '" + tok + "'", line);
    images.push_back(static_cast<Point>(v));
  }
  if (images.size() != degree)
    throw ParseError("image list has " + std::to_string(images.size()) + " entries, degree is " +
                         std::to_string(degree),
                     line);
  std::vector<bool> hit(degree, false);
  for (auto p : images) {
    if (p >= degree || hit[p])
      throw ParseError("image list is not a bijection of 0.." + std::to_string(degree - 1), line);
    hit[p] = true;
  }
  return Permutation(std::move(images));
}

} // namespace

Catalog Catalog::parse(std::string_view text)
{
  Catalog c;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line[0] == '#')
      continue;
    auto fields = split(line, '|');
    if (fields.size() != 3)
      throw ParseError("expected 'name | degree | generators'", line_no);
    auto const &name = fields[0];
    if (name.empty())
      throw ParseError("empty group name", line_no);
    std::size_t degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoul(fields[1], &used);
      if (used != fields[1].size() || degree == 0)
        throw ParseError("", 0);
    } catch (std::exception const &) {
      throw ParseError("bad degree '" + fields[1] + "'", line_no);
    }
    std::vector<Permutation> gens;
    if (!fields[2].empty()) {
      for (auto const &g : split(fields[2], ';')) {
        if (g.empty())
          throw ParseError("empty generator", line_no);
        if (g[0] == '[') {
          gens.push_back(parse_images(g, degree, line_no));
          continue;
        }
        try {
          gens.push_back(Permutation::parse(g, degree));
        } catch (Error const &e) {
          throw ParseError(std::string("generator '") + g + "': " + e.what(), line_no);
        }
      }
    }
    try {
      c.add(name, PermutationGroup(degree, gens, name));
    } catch (InvalidArgument const &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return c;
}

Catalog Catalog::load(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open catalog " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Catalog const &Catalog::bundled()
{
  static Catalog const c = parse(bundled_catalog_text);
  return c;
}

Catalog Catalog::from_environment()
{
  if (char const *p = std::getenv("VLAB_CATALOG"); p && *p)
    return load(p);
  return bundled();
}

void Catalog::add(std::string name, PermutationGroup group)
{
  if (find(name))
    throw InvalidArgument("duplicate catalog entry '" + name + "'");
  _entries.push_back({std::move(name), std::move(group)});
}

PermutationGroup const *Catalog::find(std::string_view name) const
{
  for (auto const &e : _entries) {
    if (e.name == name)
      return &e.group;
  }
  return nullptr;
}

std::string Catalog::serialize() const
{
  std::string out;
  for (auto const &e : _entries)
    out += catalog_record(e.name, e.group) + "\n";
  return out;
}

std::string catalog_record(std::string_view name, PermutationGroup const &g)
{
  std::string out = std::string(name) + " | " + std::to_string(g.degree()) + " |";
  char const *sep = " ";
  for (auto const &x : g.generators()) {
    out += sep + x.to_string();
    sep = "; ";
  }
  return out;
}

} // namespace vlab
