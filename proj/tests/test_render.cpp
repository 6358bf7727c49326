#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "kcycles/expectation.hpp"
#include "kcycles/oeis.hpp"
#include "kcycles/render.hpp"
#include "support.hpp"

using namespace kcycles;
using kcycles::test::error_of;

namespace {

bool same(const ExpectationTable& a, const ExpectationTable& b) {
  if (a.k != b.k || a.rows.size() != b.rows.size()) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    if (a.rows[r].n != b.rows[r].n || a.rows[r].cells.size() != b.rows[r].cells.size()) return false;
    for (std::size_t c = 0; c < a.rows[r].cells.size(); ++c) {
      if (a.rows[r].cells[c].m != b.rows[r].cells[c].m || a.rows[r].cells[c].value != b.rows[r].cells[c].value) {
        return false;
      }
    }
  }
  return true;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kcycles-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("markdown with explicit denominators") {
    const auto text = render_table(expectation_table(2, 4), OutputFormat::markdown, RationalStyle::figure1);
    CHECK(text ==
          "k = 2\n\n"
          "| n | m=0 | m=1 | m=2 |\n"
          "|---|---|---|---|\n"
          "| 1 | 1/1 | | |\n"
          "| 2 | 1/1 | 2/1 | |\n"
          "| 3 | 2/1 | 2/1 | |\n"
          "| 4 | 13/5 | 2/1 | 3/1 |\n");
    const auto reduced = render_table(expectation_table(2, 1), OutputFormat::markdown, RationalStyle::reduced);
    CHECK(reduced.find("| 1 | 1 |") != std::string::npos);
  }

  TEST_CASE("round trips") {
    const auto table = expectation_table(2, 13);
    for (auto format : {OutputFormat::markdown, OutputFormat::csv, OutputFormat::json}) {
      for (auto style : {RationalStyle::reduced, RationalStyle::figure1}) {
        CHECK(same(parse_table(render_table(table, format, style), format), table));
      }
    }
    CHECK(error_of([&] { parse_table(render_table(table, OutputFormat::plain, RationalStyle::reduced), OutputFormat::plain); }) ==
          ErrorCode::unsupported);
    CHECK(error_of([] { parse_table("{\"k\": 2", OutputFormat::json); }) == ErrorCode::malformed_input);
  }

  TEST_CASE("json has no floating point tokens") {
    const auto json = render_table(expectation_table(3, 9), OutputFormat::json, RationalStyle::reduced);
    CHECK(json.find('.') == std::string::npos);
    CHECK(json.find("\"numerator\": \"1159\"") != std::string::npos);
  }

  TEST_CASE("csv layout") {
    const auto csv = render_table(expectation_table(2, 2), OutputFormat::csv, RationalStyle::reduced);
    CHECK(csv == "k,n,m,value\n2,1,0,1\n2,2,0,1\n2,2,1,2\n");
  }

  TEST_CASE("format names") {
    CHECK(parse_output_format("md") == OutputFormat::markdown);
    CHECK(parse_rational_style("figure1") == RationalStyle::figure1);
    CHECK(error_of([] { parse_output_format("xml"); }) == ErrorCode::malformed_input);
  }
}

TEST_SUITE("oeis") {
  TEST_CASE("ids") {
    CHECK(normalize_oeis_id("a000354") == "A000354");
    CHECK(error_of([] { normalize_oeis_id("A354"); }) == ErrorCode::malformed_input);
    CHECK(bfile_path("/tmp/x", "A000354") == std::filesystem::path("/tmp/x/b000354.txt"));
  }

  TEST_CASE("b-file parsing") {
    const auto terms = parse_bfile("# A000354\n\n0 1\n1 1\n2 5\n3 29\n");
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].index == 0);
    CHECK(terms[3].value == 29);
    CHECK(error_of([] { parse_bfile("0 1\n2 5\n"); }) == ErrorCode::malformed_input);
    CHECK(error_of([] { parse_bfile("0 x\n"); }) == ErrorCode::malformed_input);
    CHECK(error_of([] { parse_bfile("# only comments\n"); }) == ErrorCode::malformed_input);
    CHECK(error_of([] { parse_bfile("0 1 2\n"); }) == ErrorCode::malformed_input);
  }

  TEST_CASE("alignment") {
    const auto terms = parse_bfile("0 1\n1 1\n2 5\n3 29\n4 233\n5 2329\n6 27949\n");
    const auto denominators = table_denominators(2, 12);
    CHECK(denominators == std::vector<BigInt>{1, 5, 29, 233, 2329, 27949});
    const auto a = align_prefix(denominators, terms);
    CHECK(a.aligned);
    CHECK(a.matched == 6);
    CHECK(a.offset == 1);

    const auto b = align_prefix(table_denominators(3, 12), terms);
    CHECK_FALSE(b.aligned);
  }

  TEST_CASE("cache directory resolution and offline loading") {
    CHECK(resolve_oeis_cache_dir(std::filesystem::path("/explicit")) == std::filesystem::path("/explicit"));
    const auto dir = scratch_dir("oeis");
    CHECK(error_of([&] { load_oeis_sequence("A000354", dir, true); }) == ErrorCode::network);
    try {
      load_oeis_sequence("A000354", dir, true);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find((dir / "b000354.txt").string()) != std::string::npos);
    }
    const std::string body = "# cached\n0 1\n1 1\n2 5\n";
    std::ofstream(dir / "b000354.txt") << body;
    const auto seq = load_oeis_sequence("A000354", dir, true);
    CHECK(seq.source == OeisSource::cache);
    CHECK(seq.terms.size() == 3);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("vendored cache file") {
    const auto seq = load_oeis_sequence("A000354", KCYCLES_DATA_DIR "/oeis", true);
    REQUIRE(seq.terms.size() > 7);
    CHECK(seq.terms[6].value == 27949);
  }
}
