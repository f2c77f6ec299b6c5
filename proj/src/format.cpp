#include "tcc/format.hpp"

#include "tcc/errors.hpp"

namespace tcc {

std::string format_set(std::span<const Vertex> set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(set[i]);
    }
    return out + "}";
}

std::string format_family(const ComponentFamily& family) {
    std::string out;
    for (const auto& s : family.sets) out += format_set(s) + "\n";
    return out;
}

std::string format_report(const SolveReport& report) {
    return "size=" + std::to_string(report.size) + "\n" + format_set(report.best_set) + "\n";
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
    std::vector<Vertex> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto v = parse_int(std::string(text.substr(pos, end - pos)), "vertex list entry");
        if (v < 0) throw ValidationError("negative vertex id in list");
        out.push_back(static_cast<Vertex>(v));
        pos = end + 1;
    }
    return out;
}

}  // namespace tcc
