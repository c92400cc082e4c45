#include "kmf/serialize.hpp"

#include "kmf/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

namespace kmf {

namespace {

Json kset_json(KSet x) { return Json(x.labels()); }

Json groups_json(const std::vector<Block>& groups)
{
    Json out = Json::array();
    for (const auto& g : groups) {
        Json members = Json::array();
        for (const auto& x : g) {
            members.push_back(kset_json(x));
        }
        out.push_back(std::move(members));
    }
    return out;
}

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw StructuralError(std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

std::int64_t integer(const Json& doc, const char* key)
{
    const auto& v = field(doc, key);
    if (!v.is_number_integer()) {
        throw StructuralError(std::string("field '") + key + "' is not an integer");
    }
    return v.get<std::int64_t>();
}

KSet parse_kset(const Json& j, const std::string& where)
{
    if (!j.is_array() || j.empty()) {
        throw StructuralError(where + ": k-set is not a nonempty label array");
    }
    std::vector<int> labels;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw StructuralError(where + ": label is not an integer");
        }
        const auto label = v.get<std::int64_t>();
        if (label < 1 || label > kMaxLabels) {
            throw StructuralError(where + ": label " + std::to_string(label) + " outside [1, 64]");
        }
        if (!labels.empty() && label <= labels.back()) {
            throw StructuralError(where + ": labels not strictly increasing");
        }
        labels.push_back(static_cast<int>(label));
    }
    return LabelSet::from_labels(labels);
}

std::vector<Block> parse_groups(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw StructuralError(std::string(what) + " list is not an array");
    }
    std::vector<Block> out;
    out.reserve(j.size());
    for (std::size_t b = 0; b < j.size(); ++b) {
        if (!j[b].is_array()) {
            throw StructuralError(std::string(what) + " " + std::to_string(b) + " is not an array");
        }
        Block block;
        for (std::size_t m = 0; m < j[b].size(); ++m) {
            block.push_back(parse_kset(j[b][m], std::string(what) + " " + std::to_string(b) + ", member "
                                                    + std::to_string(m)));
        }
        out.push_back(std::move(block));
    }
    return out;
}

void expect_header(const Json& doc, const char* kind)
{
    if (!doc.is_object()) {
        throw StructuralError("document is not a JSON object");
    }
    if (integer(doc, "version") != kFormatVersion) {
        throw StructuralError("unsupported format version");
    }
    if (document_kind(doc) != kind) {
        throw StructuralError(std::string("document is not a ") + kind);
    }
}

void seal(Json& doc) { doc["digest"] = content_digest(doc); }

} // namespace

std::string content_digest(const Json& doc)
{
    Json copy = doc;
    if (copy.is_object()) {
        copy.erase("digest");
    }
    const std::string text = copy.dump();
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

Json to_json(const MinorCertificate& c)
{
    Json trace = Json::array();
    for (const auto& step : c.trace) {
        Json params = Json::object();
        for (const auto& [key, value] : step.params) {
            params[key] = value;
        }
        trace.push_back(Json{{"case", std::string(to_string(step.tag))}, {"params", std::move(params)}});
    }
    Json doc{
        {"version", kFormatVersion},
        {"kind", "minor"},
        {"n", c.n},
        {"k", c.k},
        {"blocks", groups_json(c.blocks)},
        {"trace", std::move(trace)},
        {"claimed_order", c.claimed_order},
    };
    seal(doc);
    return doc;
}

Json to_json(const ColoringCertificate& c)
{
    Json doc{
        {"version", kFormatVersion},
        {"kind", "coloring"},
        {"n", c.n},
        {"k", c.k},
        {"optimal", c.optimal},
        {"classes", groups_json(c.classes)},
    };
    seal(doc);
    return doc;
}

Json to_json(const AlmostRegularPartition& a)
{
    return Json{
        {"version", kFormatVersion},
        {"kind", "partition"},
        {"ground", Json::array({a.plan.first, a.plan.last})},
        {"k", a.plan.k},
        {"sizes", a.plan.sizes},
        {"classes", groups_json(a.classes)},
    };
}

Json to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return Json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

std::string document_kind(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
        throw StructuralError("document has no 'kind'");
    }
    auto kind = doc.at("kind").get<std::string>();
    if (kind != "minor" && kind != "coloring" && kind != "partition") {
        throw StructuralError("unknown document kind '" + kind + "'");
    }
    return kind;
}

MinorCertificate minor_from_json(const Json& doc)
{
    expect_header(doc, "minor");
    MinorCertificate c;
    c.n = static_cast<int>(integer(doc, "n"));
    c.k = static_cast<int>(integer(doc, "k"));
    c.blocks = parse_groups(field(doc, "blocks"), "block");
    const auto claimed = integer(doc, "claimed_order");
    if (claimed < 0) {
        throw StructuralError("negative claimed_order");
    }
    c.claimed_order = static_cast<std::uint64_t>(claimed);
    const auto& trace = field(doc, "trace");
    if (!trace.is_array()) {
        throw StructuralError("trace is not an array");
    }
    for (const auto& step : trace) {
        TraceStep s;
        const auto& tag = field(step, "case");
        if (!tag.is_string()) {
            throw StructuralError("trace case is not a string");
        }
        s.tag = case_tag_from_string(tag.get<std::string>());
        const auto& params = field(step, "params");
        if (!params.is_object()) {
            throw StructuralError("trace params is not an object");
        }
        for (const auto& [key, value] : params.items()) {
            if (!value.is_number_integer()) {
                throw StructuralError("trace parameter '" + key + "' is not an integer");
            }
            s.params[key] = value.get<std::int64_t>();
        }
        c.trace.push_back(std::move(s));
    }
    return c;
}

ColoringCertificate coloring_from_json(const Json& doc)
{
    expect_header(doc, "coloring");
    ColoringCertificate c;
    c.n = static_cast<int>(integer(doc, "n"));
    c.k = static_cast<int>(integer(doc, "k"));
    c.classes = parse_groups(field(doc, "classes"), "class");
    if (doc.contains("optimal")) {
        if (!doc.at("optimal").is_boolean()) {
            throw StructuralError("field 'optimal' is not a boolean");
        }
        c.optimal = doc.at("optimal").get<bool>();
    }
    return c;
}

AlmostRegularPartition partition_from_json(const Json& doc)
{
    expect_header(doc, "partition");
    AlmostRegularPartition a;
    const auto& ground = field(doc, "ground");
    if (!ground.is_array() || ground.size() != 2 || !ground[0].is_number_integer()
        || !ground[1].is_number_integer()) {
        throw StructuralError("ground is not [first, last]");
    }
    a.plan.first = ground[0].get<int>();
    a.plan.last = ground[1].get<int>();
    a.plan.k = static_cast<int>(integer(doc, "k"));
    const auto& sizes = field(doc, "sizes");
    if (!sizes.is_array()) {
        throw StructuralError("sizes is not an array");
    }
    for (const auto& v : sizes) {
        if (!v.is_number_unsigned()) {
            throw StructuralError("size is not a nonnegative integer");
        }
        a.plan.sizes.push_back(v.get<std::uint64_t>());
    }
    a.classes = parse_groups(field(doc, "classes"), "class");
    return a;
}

VerificationReport verify_document(const Json& doc)
{
    const auto kind = document_kind(doc);
    if (kind == "partition") {
        return verify_partition(partition_from_json(doc));
    }
    CheckResult digest{"digest", true, "absent, not checked"};
    if (doc.contains("digest")) {
        const auto& stored = doc.at("digest");
        const auto actual = content_digest(doc);
        digest.pass = stored.is_string() && stored.get<std::string>() == actual;
        digest.detail = digest.pass ? "matches content" : "stored digest does not match content (" + actual + ")";
    }
    VerificationReport report = kind == "minor" ? verify_minor(minor_from_json(doc))
                                                : verify_coloring(coloring_from_json(doc));
    report.checks.insert(report.checks.begin(), std::move(digest));
    return report;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json load_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw StructuralError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw StructuralError(path.string() + ": " + e.what());
    }
}

void save_json(const std::filesystem::path& path, const Json& doc)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << render(doc);
    if (!out) {
        throw Error("write failed for " + path.string());
    }
}

} // namespace kmf
