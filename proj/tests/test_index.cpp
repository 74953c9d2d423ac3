#include <doctest.h>

#include <random>

#include "ontolint/entity_index.hpp"
#include "ontolint/turtle.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ontolint;

static Vocabulary V;

TEST_CASE("a declared class is not an individual") {
    Graph g = parse_turtle(
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "<http://e/C> a owl:Class .");
    EntityIndex idx = classify_entities(g, V);
    CHECK(idx.is_class(Iri("http://e/C")));
    CHECK_FALSE(idx.is_individual(Iri("http://e/C")));
    CHECK_FALSE(idx.is_class(Iri(std::string(ns::owl) + "Class")));
}

TEST_CASE("punning: a typed class is both class and individual") {
    Graph g = parse_turtle(
        "@prefix ex: <http://e/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "ex:PC a owl:Class .\n"
        "ex:PC a ex:FormalEntity .\n"
        "ex:CSP a ex:PC .");
    EntityIndex idx = classify_entities(g, V);
    CHECK(idx.is_punned(Iri("http://e/PC")));
    CHECK(idx.is_individual(Iri("http://e/CSP")));
    CHECK_FALSE(idx.is_class(Iri("http://e/CSP")));
    CHECK(idx.is_class(Iri("http://e/FormalEntity")));
    CHECK(idx.punned() == std::vector<Iri>{Iri("http://e/PC")});
}

TEST_CASE("subClassOf objects become classes, subjects do not by themselves") {
    Graph g = parse_turtle(
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "<http://e/A> rdfs:subClassOf <http://e/B> .");
    EntityIndex idx = classify_entities(g, V);
    CHECK(idx.is_class(Iri("http://e/B")));
    CHECK_FALSE(idx.is_class(Iri("http://e/A")));
}

TEST_CASE("property declarations set property roles only") {
    Graph g = parse_turtle(
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "<http://e/p> a owl:ObjectProperty .\n"
        "<http://e/q> a owl:AnnotationProperty .\n"
        "<http://e/r> a owl:DatatypeProperty .");
    EntityIndex idx = classify_entities(g, V);
    CHECK(idx.roles(Iri("http://e/p")).isObjectProp);
    CHECK(idx.roles(Iri("http://e/q")).isAnnotationProp);
    CHECK(idx.roles(Iri("http://e/r")).isDatatypeProp);
    CHECK_FALSE(idx.is_individual(Iri("http://e/p")));
}

TEST_CASE("blank nodes are never indexed") {
    Graph g = parse_turtle(
        "@prefix ex: <http://e/> .\n"
        "[ a ex:C ] .\n"
        "_:b a ex:D .");
    EntityIndex idx = classify_entities(g, V);
    for (const auto& [iri, roles] : idx.entries()) {
        CHECK(iri.value.rfind("http://", 0) == 0);
        CHECK_FALSE(roles.isIndividual);  // only blank subjects were typed
    }
    CHECK(idx.is_class(Iri("http://e/C")));
    CHECK(idx.is_class(Iri("http://e/D")));
}

TEST_CASE("mixed fixture matches the per-triple accumulation oracle") {
    Graph g = parse_turtle(
        "@prefix ex: <http://e/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "ex:A a owl:Class .\n"
        "ex:B a owl:Class .\n"
        "ex:B rdfs:subClassOf ex:A .\n"
        "ex:B a ex:Meta .\n"
        "ex:x a ex:B .\n"
        "ex:y a ex:B .\n"
        "ex:z a owl:NamedIndividual .\n"
        "ex:p a owl:ObjectProperty .\n"
        "ex:x ex:p ex:y .\n"
        "ex:note a owl:AnnotationProperty .\n"
        "ex:x ex:note \"hi\" .\n"
        "ex:w rdfs:subClassOf ex:B .\n");
    REQUIRE(g.size() == 12);
    EntityIndex idx = classify_entities(g, V);
    auto expected = oracle::classify(g, V);
    for (const auto& [iri, f] : expected) {
        const EntityRoles& r = idx.roles(iri);
        CHECK(r.isClass == f.isClass);
        CHECK(r.isIndividual == f.isIndividual);
        CHECK(r.isObjectProp == f.isObjectProp);
        CHECK(r.isAnnotationProp == f.isAnnotationProp);
        CHECK(r.isDatatypeProp == f.isDatatypeProp);
    }
    for (const auto& [iri, r] : idx.entries()) {
        bool any = r.isClass || r.isIndividual || r.is_property();
        if (any) CHECK(expected.count(iri) == 1);
    }
}

TEST_CASE("classification is monotone under triple addition") {
    std::mt19937 rng(23);
    for (int round = 0; round < 20; ++round) {
        auto tax = testutil::random_taxonomy(rng, 8, 12);
        Graph g1 = Graph::from_triples(tax.triples);
        EntityIndex before = classify_entities(g1, V);
        auto extra = tax.triples;
        extra.push_back({testutil::node("extra"), V.typeProp, testutil::node("C0")});
        extra.push_back({testutil::node("C0"), V.subClassProp, testutil::node("NewSuper")});
        Graph g2 = Graph::from_triples(extra);
        EntityIndex after = classify_entities(g2, V);
        for (const auto& [iri, r] : before.entries()) {
            const EntityRoles& r2 = after.roles(iri);
            if (r.isClass) CHECK(r2.isClass);
            if (r.isIndividual) CHECK(r2.isIndividual);
            if (r.isObjectProp) CHECK(r2.isObjectProp);
        }
    }
}

TEST_CASE("declaring documents are tracked per source") {
    Graph g = parse_turtle("<http://e/C> a <http://www.w3.org/2002/07/owl#Class> .", std::nullopt,
                           "doc-one.ttl");
    EntityIndex idx = classify_entities(g, V);
    CHECK(idx.roles(Iri("http://e/C")).declaringDocuments == std::set<std::string>{"doc-one.ttl"});
}
