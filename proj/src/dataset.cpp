#include "vcem/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <unordered_set>

#include "json.hpp"
#include "vcem/rng.hpp"

namespace vcem {

namespace {

std::string row_id(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06zu", i);
    return buf;
}

void check_unique(std::unordered_set<std::string>& seen, const std::string& id) {
    if (!seen.insert(id).second) throw DuplicateId(id);
}

}  // namespace

Dataset load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");

    Dataset ds;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;

        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object() || !obj.contains("id") ||
            !obj["id"].is_string() || !obj.contains("embedding") ||
            !obj["embedding"].is_array()) {
            throw MalformedLine(line_no);
        }

        TrajectoryRecord rec;
        rec.id = obj["id"].get<std::string>();
        if (rec.id.empty()) throw MalformedLine(line_no);
        check_unique(seen, rec.id);

        for (const auto& v : obj["embedding"]) {
            if (!v.is_number()) throw MalformedLine(line_no);
            rec.embedding.push_back(v.get<double>());
        }
        if (ds.records.empty()) {
            ds.dim = rec.embedding.size();
        } else if (rec.embedding.size() != ds.dim) {
            throw DimensionMismatch(line_no, ds.dim, rec.embedding.size());
        }
        for (double v : rec.embedding) {
            if (!std::isfinite(v)) throw NonFiniteValue(line_no);
        }

        if (obj.contains("losses")) {
            if (!obj["losses"].is_array() || obj["losses"].empty())
                throw MalformedLine(line_no);
            std::vector<double> losses;
            for (const auto& v : obj["losses"]) {
                if (!v.is_number()) throw MalformedLine(line_no);
                const double x = v.get<double>();
                if (!std::isfinite(x) || x < 0.0) throw NonFiniteValue(line_no);
                losses.push_back(x);
            }
            rec.step_losses = std::move(losses);
        }
        if (obj.contains("difficulty")) {
            if (!obj["difficulty"].is_number()) throw MalformedLine(line_no);
            const double x = obj["difficulty"].get<double>();
            if (!std::isfinite(x) || x < 0.0) throw NonFiniteValue(line_no);
            rec.difficulty = x;
        }

        ds.records.push_back(std::move(rec));
    }
    return ds;
}

void save_jsonl(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");
    for (const auto& rec : ds.records) {
        nlohmann::ordered_json obj;
        obj["id"] = rec.id;
        obj["embedding"] = rec.embedding;
        if (rec.step_losses) obj["losses"] = *rec.step_losses;
        if (rec.difficulty) obj["difficulty"] = *rec.difficulty;
        out << obj.dump() << '\n';
    }
    if (!out) throw IoError(path, "write failed");
}

Dataset load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");

    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    if (bytes.size() < 5 || bytes.compare(0, 5, "VCEM1") != 0) throw BadMagic();
    if (bytes.size() < 13) throw TruncatedFile(13, bytes.size());

    auto u32le = [&](std::size_t off) {
        const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + off);
        return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
               (static_cast<std::uint32_t>(p[2]) << 16) |
               (static_cast<std::uint32_t>(p[3]) << 24);
    };
    const std::uint32_t n = u32le(5);
    const std::uint32_t d = u32le(9);

    const std::uint64_t expected = 13 + 4ull * n * d;
    if (bytes.size() != expected) throw TruncatedFile(expected, bytes.size());

    Dataset ds;
    ds.dim = d;
    ds.records.reserve(n);
    std::size_t off = 13;
    for (std::uint32_t i = 0; i < n; ++i) {
        TrajectoryRecord rec;
        rec.id = row_id(i);
        rec.embedding.resize(d);
        for (std::uint32_t j = 0; j < d; ++j, off += 4) {
            const std::uint32_t u = u32le(off);
            float f;
            static_assert(sizeof(f) == 4);
            std::memcpy(&f, &u, 4);
            if (!std::isfinite(f)) throw NonFiniteValue(i, j);
            rec.embedding[j] = static_cast<double>(f);
        }
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

void save_matrix(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");

    out.write("VCEM1", 5);
    auto put_u32le = [&](std::uint32_t v) {
        unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>((v >> 8) & 0xff),
                              static_cast<unsigned char>((v >> 16) & 0xff),
                              static_cast<unsigned char>((v >> 24) & 0xff)};
        out.write(reinterpret_cast<const char*>(b), 4);
    };
    put_u32le(static_cast<std::uint32_t>(ds.records.size()));
    put_u32le(static_cast<std::uint32_t>(ds.dim));
    for (const auto& rec : ds.records) {
        for (double v : rec.embedding) {
            const float f = static_cast<float>(v);
            std::uint32_t u;
            std::memcpy(&u, &f, 4);
            put_u32le(u);
        }
    }
    if (!out) throw IoError(path, "write failed");
}

Dataset synth_dataset(std::uint64_t seed, std::size_t n, std::size_t d,
                      std::size_t n_clusters, double spread) {
    if (n < 1) throw InvalidArg("synth_dataset: n must be >= 1");
    if (d < 1) throw InvalidArg("synth_dataset: d must be >= 1");
    if (n_clusters < 1 || n_clusters > n)
        throw InvalidArg("synth_dataset: need 1 <= n_clusters <= n");
    if (!(spread >= 0.0)) throw InvalidArg("synth_dataset: spread must be >= 0");

    Rng rng(seed);

    std::vector<std::vector<double>> centers(n_clusters, std::vector<double>(d));
    for (auto& c : centers)
        for (auto& x : c) x = rng.uniform(-10.0, 10.0);

    std::vector<double> loss_level(n_clusters);
    for (auto& mu : loss_level) mu = rng.uniform(0.1, 2.0);

    const double loss_sigma = std::sqrt(0.1);
    Dataset ds;
    ds.dim = d;
    ds.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = i % n_clusters;
        TrajectoryRecord rec;
        rec.id = row_id(i);
        rec.embedding.resize(d);
        for (std::size_t j = 0; j < d; ++j)
            rec.embedding[j] = centers[c][j] + spread * rng.normal();
        std::vector<double> losses(8);
        for (auto& l : losses) l = std::fabs(loss_level[c] + loss_sigma * rng.normal());
        rec.step_losses = std::move(losses);
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

}  // namespace vcem
