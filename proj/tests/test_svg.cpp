#include "fanfree/constructions.hpp"
#include "fanfree/crossings.hpp"
#include "fanfree/svg.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <stack>

using namespace fanfree;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

/// element nesting is balanced and every tag is closed
bool well_formed(const std::string& svg) {
  static const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)[^>]*?(/?)>)");
  std::stack<std::string> open;
  for (std::sregex_iterator it(svg.begin(), svg.end(), tag), end; it != end; ++it) {
    const auto& m = *it;
    if (m[1].length() > 0) {
      if (open.empty() || open.top() != m[2].str()) return false;
      open.pop();
    } else if (m[3].length() == 0) {
      open.push(m[2].str());
    }
  }
  return open.empty();
}

}  // namespace

TEST(Svg, OneGlyphPerVertexAndEdge) {
  for (int n : {6, 9, 13}) {
    const auto d = gen_straight_extremal(n);
    const auto c = compute_crossings(d);
    const auto svg = render_svg(d, c);
    EXPECT_EQ(count(svg, "<circle"), d.graph.vertex_count());
    EXPECT_EQ(count(svg, "<path"), d.graph.edge_count());
    EXPECT_EQ(count(svg, "<rect"), c.size());
    EXPECT_TRUE(well_formed(svg));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
  }
}

TEST(Svg, CrossingMarksCanBeTurnedOff) {
  const auto d = gen_straight_extremal(8);
  SvgOptions o;
  o.mark_crossings = false;
  EXPECT_EQ(count(render_svg(d, compute_crossings(d), o), "<rect"), 0u);
}
