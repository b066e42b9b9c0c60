#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wsdlsem/ingest.hpp"
#include "wsdlsem/metrics.hpp"

namespace testing {

inline std::filesystem::path fixtures() { return WSDLSEM_TEST_FIXTURES; }
inline std::filesystem::path data_dir() { return WSDLSEM_TEST_DATA; }

inline std::string fixture(const std::string& rel) { return wsdlsem::read_file(fixtures() / rel); }

inline std::vector<std::filesystem::path> corpus_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(fixtures() / "corpus"))
    out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Shipped configuration files loaded through the library.
inline wsdlsem::Pipeline default_pipeline() {
  wsdlsem::Pipeline p;
  p.lexicon = wsdlsem::load_lexicon(wsdlsem::read_file(data_dir() / "lexicon.tsv"));
  p.preprocess.abbreviations =
      wsdlsem::parse_abbreviations(wsdlsem::read_file(data_dir() / "abbreviations.txt"));
  p.preprocess.stop_words =
      wsdlsem::parse_stop_words(wsdlsem::read_file(data_dir() / "stopwords.txt"));
  return p;
}

// The same files read by the oracle's own loader.
inline oracle::Config default_oracle() {
  return oracle::load_config(wsdlsem::read_file(data_dir() / "lexicon.tsv"),
                             wsdlsem::read_file(data_dir() / "abbreviations.txt"),
                             wsdlsem::read_file(data_dir() / "stopwords.txt"));
}

inline std::vector<std::string> texts(const std::vector<wsdlsem::Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.text());
  return out;
}

// Fig. 2: one `category` parameter typed by a sequence of two strings.
inline constexpr const char* kCategoryWsdl = R"(<?xml version="1.0"?>
<definitions targetNamespace="urn:cat" xmlns="http://schemas.xmlsoap.org/wsdl/"
    xmlns:tns="urn:cat" xmlns:xsd="http://www.w3.org/2001/XMLSchema">
  <types>
    <xsd:schema targetNamespace="urn:cat">
      <xsd:complexType name="categoryDetail">
        <xsd:sequence>
          <xsd:element name="singer" type="xsd:string"/>
          <xsd:element name="composer" type="xsd:string"/>
        </xsd:sequence>
      </xsd:complexType>
    </xsd:schema>
  </types>
  <message name="In"><part name="category" type="tns:categoryDetail"/></message>
  <portType name="P"><operation name="Op"><input message="tns:In"/></operation></portType>
</definitions>
)";

}  // namespace testing
