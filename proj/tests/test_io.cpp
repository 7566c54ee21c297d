#include <unistd.h>

#include <filesystem>
#include <functional>
#include <string>

#include "doctest.h"
#include "hopfinv/error.hpp"
#include "hopfinv/io.hpp"
#include "json.hpp"

using namespace hopfinv;

namespace {

// unique scratch file removed on scope exit
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("hopfinv-test-" + tag + "-" + std::to_string(::getpid()) + ".json");
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

std::string error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const HopfError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("hopf structures round trip through json") {
  HopfPtr h = group_algebra(*named_group("S3"));
  TempFile f("s3");
  save_hopf(*h, f.str());
  HopfPtr back = load_hopf(f.str());
  CHECK(hopf_json_text(*back) == hopf_json_text(*h));
  CHECK(validate(*back).all_pass());
  CHECK(back->labels == h->labels);
}

TEST_CASE("r-matrices survive the round trip") {
  HopfPtr d = drinfeld_double(*named_group("C2"));
  TempFile f("dc2");
  save_hopf(*d, f.str());
  HopfPtr back = load_hopf(f.str());
  CHECK(back->has_rmatrix);
  CHECK(hopf_json_text(*back) == hopf_json_text(*d));
  CHECK(validate(*back).all_pass());
}

TEST_CASE("scalar grammar accepts strings and integers") {
  TempFile f("tiny");
  write_text_file(f.str(), R"({
    "dim": 1,
    "mult": [[1, 1, 1, "z3"]],
    "unit": [1],
    "comult": [[1, 1, 1, "1"]],
    "counit": ["1"],
    "antipode": [[1, 1, 2]]
  })");
  HopfPtr h = load_hopf(f.str());
  CHECK(h->conductor == 3);
  CHECK(h->mult[0][0].second == Cyc::zeta(3));
  CHECK(h->unit == std::vector<Cyc>{Cyc(1)});
  CHECK(h->antipode.at(0, 0) == Cyc(2));
  // no validation happens at load time; this structure fails it
  CHECK(!validate(*h).all_pass());
}

TEST_CASE("load errors carry io codes") {
  CHECK(error_code_of([] { load_hopf("definitely-missing.json"); }) == "io/read");

  TempFile bad("bad");
  write_text_file(bad.str(), "{ not json");
  CHECK(error_code_of([&] { load_hopf(bad.str()); }) == "io/format");

  TempFile missing("missing-unit");
  write_text_file(missing.str(), R"({"dim": 1, "counit": ["1"]})");
  CHECK(error_code_of([&] { load_hopf(missing.str()); }) == "io/format");

  TempFile short_entry("short-entry");
  write_text_file(short_entry.str(),
                  R"({"dim": 1, "mult": [[1, 1, 1]], "unit": [1], "counit": [1]})");
  CHECK(error_code_of([&] { load_hopf(short_entry.str()); }) == "io/format");

  TempFile range("range");
  write_text_file(range.str(),
                  R"({"dim": 1, "mult": [[1, 2, 1, 1]], "unit": [1], "counit": [1]})");
  CHECK(error_code_of([&] { load_hopf(range.str()); }) == "io/format");

  TempFile scalar("scalar");
  write_text_file(scalar.str(), R"({"dim": 1, "unit": ["zzz"], "counit": [1]})");
  CHECK(error_code_of([&] { load_hopf(scalar.str()); }) == "io/format");

  CHECK(error_code_of([] { load_group("definitely-missing.json"); }) == "io/read");
  TempFile badgroup("badgroup");
  write_text_file(badgroup.str(), R"({"order": 2, "table": [1, 2, 2]})");
  CHECK(error_code_of([&] { load_group(badgroup.str()); }) == "io/format");
}

TEST_CASE("corrupting a saved structure fails validation") {
  HopfPtr d = drinfeld_double(*named_group("C2"));
  CHECK(validate(*d).all_pass());
  TempFile f("corrupt");
  save_hopf(*d, f.str());
  auto j = nlohmann::json::parse(read_text_file(f.str()));
  REQUIRE(j.at("comult").size() > 1);
  j["comult"].erase(0);
  write_text_file(f.str(), j.dump(2));
  HopfPtr broken = load_hopf(f.str());
  CHECK(!validate(*broken).all_pass());
}

TEST_CASE("groups round trip") {
  auto g = *named_group("S3");
  TempFile f("group");
  save_group(g, f.str());
  FinGroup back = load_group(f.str());
  CHECK(back.name == "S3");
  CHECK(back.n == 6);
  CHECK(back.table == g.table);
  CHECK(back.identity == g.identity);
}

TEST_CASE("character tables round trip exactly") {
  auto t = character_table(*named_group("C3"));
  REQUIRE(t.has_value());
  TempFile f("table");
  save_char_table(*t, f.str());
  CharTable back = load_char_table(f.str());
  CHECK(back.conductor == t->conductor);
  REQUIRE(back.rows.size() == t->rows.size());
  for (size_t r = 0; r < back.rows.size(); ++r) {
    CHECK(back.rows[r].name == t->rows[r].name);
    CHECK(back.rows[r].dim == t->rows[r].dim);
    CHECK(back.rows[r].values == t->rows[r].values);
  }
}

TEST_CASE("structure and group resolution") {
  CHECK(resolve_hopf("C3")->dim == 3);
  CHECK(resolve_hopf("dual:S3")->dim == 6);
  HopfPtr d = resolve_hopf("double:C2");
  CHECK(d->dim == 4);
  CHECK(d->has_rmatrix);
  CHECK(resolve_group("Q8").n == 8);
  CHECK(error_code_of([] { resolve_group("nope"); }) == "io/unknown-group");
  CHECK(error_code_of([] { resolve_hopf("nope"); }) == "io/unknown-group");

  TempFile f("resolve");
  save_hopf(*group_algebra(*named_group("C4")), f.str());
  CHECK(resolve_hopf(f.str())->dim == 4);
}

TEST_CASE("serialization is deterministic") {
  HopfPtr h = group_algebra(*named_group("C3"));
  CHECK(hopf_json_text(*h) == hopf_json_text(*h));
  CHECK(hopf_json_text(*h).find("\"dim\": 3") != std::string::npos);

  TempFile f("text");
  write_text_file(f.str(), "round trip\n");
  CHECK(read_text_file(f.str()) == "round trip\n");
  CHECK(error_code_of([] { write_text_file("no-such-dir/x.txt", "x"); }) == "io/write");
}

}  // TEST_SUITE
