#include <gtest/gtest.h>

#include <filesystem>

#include "oakit/error.hpp"
#include "oakit/turtle.hpp"
#include "oakit/vocab.hpp"
#include "support.hpp"

using namespace oakit;
using namespace testing_support;

namespace {

const Iri kP{"urn:x:p"};
const Iri kQ{"urn:x:q"};

Literal lit(std::string s) { return Literal{std::move(s), std::nullopt, std::nullopt}; }

// Random graph over a few IRIs, blank nodes and literals.
Graph random_graph(Rng& rng, std::size_t max_blanks) {
  Graph g;
  const auto blanks = rng.between(0, max_blanks);
  const auto n = rng.between(0, 14);
  auto node = [&]() -> Term {
    if (blanks > 0 && rng.chance(0.5)) return BlankNode{"b" + std::to_string(rng.below(blanks))};
    return Iri{"urn:x:i" + std::to_string(rng.below(4))};
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Iri pred = rng.pick(std::vector<Iri>{kP, kQ, vocab::rdf_type, vocab::oa_hasBody});
    Term obj;
    switch (rng.below(4)) {
      case 0: obj = lit(rng.text(8, true)); break;
      case 1: obj = Literal{std::to_string(rng.below(500)), vocab::xsd_integer, std::nullopt}; break;
      case 2: obj = Literal{rng.token(4), std::nullopt, std::string("en")}; break;
      default: obj = node(); break;
    }
    g.add(node(), pred, obj);
  }
  return g;
}

}  // namespace

// -- Graph ------------------------------------------------------------------

TEST(Graph, DeduplicatesAndKeepsInsertionOrder) {
  Graph g;
  EXPECT_TRUE(g.add(Iri{"urn:x:a"}, kP, lit("1")));
  EXPECT_TRUE(g.add(Iri{"urn:x:a"}, kP, lit("2")));
  EXPECT_FALSE(g.add(Iri{"urn:x:a"}, kP, lit("1")));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.objects(Iri{"urn:x:a"}, kP), (std::vector<Term>{lit("1"), lit("2")}));
}

TEST(Graph, RejectsLiteralSubject) {
  Graph g;
  try {
    g.add(lit("s"), kP, lit("o"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Graph, SubjectsAndTypes) {
  Graph g;
  g.add(BlankNode{"a"}, vocab::rdf_type, vocab::oa_Annotation);
  g.add(BlankNode{"a"}, kP, Iri{"urn:x:o"});
  g.add(Iri{"urn:x:o"}, kP, Iri{"urn:x:o2"});
  EXPECT_TRUE(g.has_type(BlankNode{"a"}, vocab::oa_Annotation));
  EXPECT_FALSE(g.has_type(Iri{"urn:x:o"}, vocab::oa_Annotation));
  EXPECT_EQ(g.subjects(kP, Iri{"urn:x:o"}), std::vector<Term>{BlankNode{"a"}});
  EXPECT_EQ(g.subject_terms().size(), 2u);
  EXPECT_EQ(g.about(BlankNode{"a"}).size(), 2u);
}

// -- Isomorphism ------------------------------------------------------------

TEST(Isomorphism, RenamedBlanksAreIsomorphic) {
  Graph a, b;
  a.add(BlankNode{"x"}, kP, BlankNode{"y"});
  a.add(BlankNode{"y"}, kQ, lit("488"));
  b.add(BlankNode{"m"}, kP, BlankNode{"n"});
  b.add(BlankNode{"n"}, kQ, lit("488"));
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(same_triples(a, b));
}

TEST(Isomorphism, ChangedLiteralIsNot) {
  Graph a, b;
  a.add(BlankNode{"x"}, vocab::oa_start, Literal{"488", vocab::xsd_integer, std::nullopt});
  b.add(BlankNode{"x"}, vocab::oa_start, Literal{"489", vocab::xsd_integer, std::nullopt});
  EXPECT_FALSE(isomorphic(a, b));
}

TEST(Isomorphism, SkolemizedFormIsNot) {
  Graph a;
  a.add(BlankNode{"b2"}, vocab::rdf_type, vocab::oa_TimeState);
  EXPECT_FALSE(isomorphic(a, skolemize(a, Iri{"http://ex.org/genid/"})));
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // Two 6-cycles versus one 3-cycle pair: colour refinement alone cannot
  // tell these apart.
  auto cycle = [](Graph& g, std::vector<std::string> labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      g.add(BlankNode{labels[i]}, kP, BlankNode{labels[(i + 1) % labels.size()]});
    }
  };
  Graph six, threes;
  cycle(six, {"a", "b", "c", "d", "e", "f"});
  cycle(threes, {"a", "b", "c"});
  cycle(threes, {"d", "e", "f"});
  EXPECT_FALSE(isomorphic(six, threes));
  Graph six2;
  cycle(six2, {"u", "v", "w", "x", "y", "z"});
  EXPECT_TRUE(isomorphic(six, six2));
}

TEST(Isomorphism, AgreesWithBruteForceOnRandomGraphs) {
  Rng rng(7);
  int positives = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph a = random_graph(rng, 5);
    // Half the time compare against a relabelled copy, which must match.
    Graph b;
    if (rng.chance(0.5)) {
      std::vector<int> perm = {4, 2, 0, 3, 1};
      for (const auto& t : a.triples()) {
        auto relabel = [&](const Term& x) -> Term {
          if (const auto* bl = std::get_if<BlankNode>(&x)) {
            return BlankNode{"z" + std::to_string(perm[static_cast<std::size_t>(std::stoi(bl->label.substr(1)))])};
          }
          return x;
        };
        b.add(relabel(t.subject), t.predicate, relabel(t.object));
      }
    } else {
      b = random_graph(rng, 5);
    }
    const bool expected = brute_force_isomorphic(a, b);
    positives += expected;
    ASSERT_EQ(isomorphic(a, b), expected) << serialize_turtle(a) << "\n---\n" << serialize_turtle(b);
  }
  EXPECT_GT(positives, 100);
}

// -- Skolemization ----------------------------------------------------------

TEST(Skolemize, ReplacesEveryBlank) {
  const Iri base{"http://ex.org/genid/"};
  Graph g;
  g.add(Iri{"urn:x:sr"}, vocab::oa_hasState, BlankNode{"b2"});
  g.add(BlankNode{"b2"}, vocab::rdf_type, vocab::oa_TimeState);
  const Graph s = skolemize(g, base);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& t : s.triples()) {
    EXPECT_FALSE(is_blank(t.subject));
    EXPECT_FALSE(is_blank(t.object));
  }
  const auto state = s.objects(Iri{"urn:x:sr"}, vocab::oa_hasState);
  ASSERT_EQ(state.size(), 1u);
  EXPECT_TRUE(std::get<Iri>(state[0]).value.starts_with(base.value));
  EXPECT_TRUE(s.has_type(state[0], vocab::oa_TimeState));
}

TEST(Skolemize, GroundGraphUnchangedAndIdempotent) {
  const Iri base{"http://ex.org/genid/"};
  Graph ground;
  ground.add(Iri{"urn:x:a"}, kP, lit("x"));
  EXPECT_TRUE(same_triples(skolemize(ground, base), ground));

  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng, 4);
    const Graph once = skolemize(g, base);
    EXPECT_TRUE(same_triples(skolemize(once, base), once));
    EXPECT_TRUE(same_triples(skolemize(g, base), once)) << "not deterministic";
  }
}

TEST(Skolemize, AvoidsExistingIris) {
  const Iri base{"http://ex.org/genid/"};
  Graph g;
  g.add(Iri{"http://ex.org/genid/genid-0"}, kP, BlankNode{"a"});
  const Graph s = skolemize(g, base);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_NE(s.triples()[0].subject, s.triples()[0].object);
}

// -- Parser -----------------------------------------------------------------

TEST(TurtleParse, AKeywordExpandsToRdfType) {
  const auto g = parse_turtle("@prefix oa: <http://www.w3.org/ns/oa#> . <urn:x:a> a oa:Annotation .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].predicate.value, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  EXPECT_EQ(g.triples()[0].object, Term{Iri{"http://www.w3.org/ns/oa#Annotation"}});
}

TEST(TurtleParse, WorkedExampleRootHasFiveTriples) {
  const auto g = parse_turtle(fixture("worked_example.ttl"));
  const auto root = g.about(Iri{"http://openannotation.org/eg/anno1"});
  ASSERT_EQ(root.size(), 5u);
  std::vector<std::string> predicates;
  for (const auto* t : root) predicates.push_back(t->predicate.value);
  EXPECT_EQ(predicates, (std::vector<std::string>{
                            "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
                            "http://www.w3.org/ns/oa#isMotivatedBy",
                            "http://www.w3.org/ns/oa#styledBy",
                            "http://www.w3.org/ns/oa#hasBody",
                            "http://www.w3.org/ns/oa#hasTarget",
                        }));
  EXPECT_EQ(g.size(), 33u);
}

TEST(TurtleParse, MissingObjectReportsPosition) {
  try {
    parse_turtle("<a> <b> .");
    FAIL() << "expected SyntaxError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(*e.position(), (SourcePosition{1, 9}));
  }
}

TEST(TurtleParse, AnnoteaPrefixIsNotTheAKeyword) {
  const auto g = parse_turtle(
      "@prefix a: <http://www.w3.org/2000/10/annotation-ns#> .\n"
      "<urn:x:r> a a:Annotation ; a:body \"hi\" .");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.triples()[0].predicate, vocab::rdf_type);
  EXPECT_EQ(g.triples()[0].object, Term{vocab::a_Annotation});
  EXPECT_EQ(g.triples()[1].predicate, vocab::a_body);
}

TEST(TurtleParse, LiteralForms) {
  const auto g = parse_turtle(
      "@prefix x: <urn:x:> .\n"
      "x:s x:p \"caf\\u00E9 \\\"q\\\" \\\\\"@fr-CA , \"7\"^^x:t , -12 , 0 , 'single' .");
  const auto objs = g.objects(Iri{"urn:x:s"}, Iri{"urn:x:p"});
  ASSERT_EQ(objs.size(), 5u);
  EXPECT_EQ(objs[0], Term{(Literal{"café \"q\" \\", std::nullopt, std::string("fr-CA")})});
  EXPECT_EQ(objs[1], Term{(Literal{"7", Iri{"urn:x:t"}, std::nullopt})});
  EXPECT_EQ(objs[2], Term{(Literal{"-12", vocab::xsd_integer, std::nullopt})});
  EXPECT_EQ(objs[3], Term{(Literal{"0", vocab::xsd_integer, std::nullopt})});
  EXPECT_EQ(objs[4], Term{lit("single")});
}

TEST(TurtleParse, GeneratedBlanksAvoidExplicitLabels) {
  const auto g = parse_turtle("<urn:x:s> <urn:x:p> [ <urn:x:q> _:g1 ] , _:g1 .");
  std::set<Term> blanks;
  for (const auto& t : g.triples()) {
    if (is_blank(t.subject)) blanks.insert(t.subject);
    if (is_blank(t.object)) blanks.insert(t.object);
  }
  EXPECT_EQ(blanks.size(), 2u);
}

TEST(TurtleParse, EmptyCollectionIsNil) {
  const auto g = parse_turtle("<urn:x:s> <urn:x:p> () .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].object, Term{vocab::rdf_nil});
}

TEST(TurtleParse, CommentsAndDirectivesAnywhere) {
  const auto g = parse_turtle(
      "# leading\n@prefix x: <urn:x:> . # trailing\n"
      "x:s x:p <urn:x:o#frag> . # '#' inside an IRI is not a comment\n"
      "PREFIX y: <urn:y:>\ny:s y:p \"has # hash\" .");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.triples()[0].object, Term{Iri{"urn:x:o#frag"}});
  EXPECT_EQ(g.triples()[1].object, Term{lit("has # hash")});
}

TEST(TurtleParse, ColumnsCountCodePoints) {
  try {
    parse_turtle("<urn:x:s> <urn:x:p> \"é中\" ?");
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.position());
    EXPECT_EQ(e.position()->column, 26u);
  }
}

// Every well-formed fixture equals its hand-written N-Triples file.
TEST(TurtleParse, FixturesMatchNTriplesOracles) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir())) {
    if (entry.path().extension() != ".ttl") continue;
    auto nt = entry.path();
    nt.replace_extension(".nt");
    ASSERT_TRUE(std::filesystem::exists(nt)) << nt;
    SCOPED_TRACE(entry.path().filename().string());
    const Graph parsed = parse_turtle(read_file(entry.path()));
    const Graph oracle = parse_ntriples(read_file(nt));
    EXPECT_EQ(parsed.size(), oracle.size());
    EXPECT_TRUE(brute_force_isomorphic(parsed, oracle));
    EXPECT_TRUE(isomorphic(parsed, oracle));
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(TurtleParse, MalformedFixturesReportTheRightLine) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "malformed")) {
    SCOPED_TRACE(entry.path().filename().string());
    const auto text = read_file(entry.path());
    const auto line = expected_line(text);
    ASSERT_TRUE(line);
    try {
      parse_turtle(text);
      ADD_FAILURE() << "parsed without error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
      ASSERT_TRUE(e.position());
      EXPECT_EQ(e.position()->line, *line) << e.what();
    }
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

// -- Serializer -------------------------------------------------------------

TEST(TurtleWrite, EmptyGraphIsEmpty) { EXPECT_EQ(serialize_turtle(Graph{}), ""); }

TEST(TurtleWrite, SingleTripleIsOneStatementLine) {
  Graph g;
  g.add(Iri{"http://www.w3.org/ns/oa#x"}, vocab::oa_hasTarget, Iri{"urn:x:t"});
  EXPECT_EQ(serialize_turtle(g),
            "@prefix oa: <http://www.w3.org/ns/oa#> .\n\n"
            "oa:x oa:hasTarget <urn:x:t> .\n");
}

TEST(TurtleWrite, GroupsPredicatesAndOrdersSubjects) {
  Graph g;
  g.add(BlankNode{"b"}, kP, lit("1"));
  g.add(Iri{"urn:x:z"}, kP, lit("2"));
  g.add(Iri{"urn:x:a"}, kQ, lit("3"));
  g.add(Iri{"urn:x:a"}, vocab::rdf_type, Iri{"urn:x:T"});
  g.add(Iri{"urn:x:a"}, kQ, lit("4"));
  EXPECT_EQ(serialize_turtle(g),
            "<urn:x:a>\n    a <urn:x:T> ;\n    <urn:x:q> \"3\", \"4\" .\n\n"
            "<urn:x:z> <urn:x:p> \"2\" .\n\n"
            "_:b <urn:x:p> \"1\" .\n");
}

TEST(TurtleWrite, WorkedExampleRoundTripsAndIsDeterministic) {
  const Graph g = parse_turtle(fixture("worked_example.ttl"));
  const auto text = serialize_turtle(g);
  EXPECT_EQ(text, serialize_turtle(parse_turtle(fixture("worked_example.ttl"))));
  EXPECT_TRUE(isomorphic(parse_turtle(text), g));
  EXPECT_NE(text.find("@prefix dctypes: <http://purl.org/dc/dcmitype/> ."), std::string::npos);
  EXPECT_EQ(text.find("@prefix a:"), std::string::npos);
}

TEST(TurtleWrite, RandomGraphsRoundTrip) {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng, 6);
    const auto text = serialize_turtle(g);
    ASSERT_EQ(text, serialize_turtle(g));
    Graph back;
    ASSERT_NO_THROW(back = parse_turtle(text)) << text;
    ASSERT_TRUE(isomorphic(back, g)) << text;
  }
}

TEST(TurtleWrite, AwkwardIrisAndLabels) {
  Graph g;
  g.add(Iri{"http://www.w3.org/ns/oa#has.dot"}, kP, Iri{"http://x.org/a b>\"{}"});
  g.add(BlankNode{"not valid!"}, kP, BlankNode{"-x"});
  g.add(Iri{"http://www.w3.org/ns/oa#"}, kP, lit("\r\n\t\"\\\x01"));
  const auto text = serialize_turtle(g);
  const auto back = parse_turtle(text);
  EXPECT_TRUE(isomorphic(back, g)) << text;
}

TEST(Vocabulary, NamespacesAreBitExact) {
  EXPECT_EQ(std::string(vocab::kOa), "http://www.w3.org/ns/oa#");
  EXPECT_EQ(std::string(vocab::kCnt), "http://www.w3.org/2011/content#");
  EXPECT_EQ(std::string(vocab::kDc), "http://purl.org/dc/elements/1.1/");
  EXPECT_EQ(std::string(vocab::kDcterms), "http://purl.org/dc/terms/");
  EXPECT_EQ(std::string(vocab::kDctypes), "http://purl.org/dc/dcmitype/");
  EXPECT_EQ(std::string(vocab::kRdf), "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
  EXPECT_EQ(std::string(vocab::kAnnotea), "http://www.w3.org/2000/10/annotation-ns#");
  EXPECT_EQ(std::string(vocab::kAo), "http://purl.org/ao/core/");
}
