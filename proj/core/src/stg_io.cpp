#include "dagsched/stg_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dagsched {

namespace {

struct Line {
    int number = 0;  // 1-based line number in the source text
    std::vector<long long> tokens;
};

std::string where(const std::string& source, int line) {
    std::string loc = source.empty() ? std::string("stg") : source;
    return loc + ":" + std::to_string(line);
}

// Splits the text into integer token lines, dropping blanks and '#' comments.
std::vector<Line> tokenize(std::string_view text, const std::string& source) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        ++number;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::size_t i = 0;
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i >= raw.size() || raw[i] == '#') continue;

        Line line{number, {}};
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(raw.data() + i, raw.data() + j, value);
            if (ec != std::errc() || ptr != raw.data() + j) {
                throw MalformedRecord(where(source, number) + ": non-integer token '" +
                                      std::string(raw.substr(i, j - i)) + "'");
            }
            line.tokens.push_back(value);
            i = j;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

StgDocument parse_stg_document(std::string_view text, std::string source_name) {
    const std::vector<Line> lines = tokenize(text, source_name);
    if (lines.empty()) {
        throw MalformedRecord(where(source_name, 1) + ": no records");
    }

    const Line& head = lines.front();
    if (head.tokens.size() != 1 || head.tokens[0] < 0) {
        throw MalformedRecord(where(source_name, head.number) +
                              ": expected a single non-negative task count");
    }

    StgDocument doc;
    doc.task_count = static_cast<int>(head.tokens[0]);
    doc.source_name = std::move(source_name);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens.size() < 3) {
            throw MalformedRecord(where(doc.source_name, line.number) +
                                  ": record needs index, proc time and pred count");
        }
        StgRecord rec;
        rec.node_index = static_cast<int>(line.tokens[0]);
        rec.proc_time = line.tokens[1];
        rec.pred_count = static_cast<int>(line.tokens[2]);
        if (rec.node_index < 0 || rec.proc_time < 0 || rec.pred_count < 0) {
            throw MalformedRecord(where(doc.source_name, line.number) +
                                  ": negative field in record");
        }
        if (line.tokens.size() < 3 + static_cast<std::size_t>(rec.pred_count)) {
            throw InconsistentPredCount(
                where(doc.source_name, line.number) + ": pred count " +
                std::to_string(rec.pred_count) + " but only " +
                std::to_string(line.tokens.size() - 3) + " predecessors listed");
        }
        // Anything past the predecessor list is an unknown trailing field.
        for (int k = 0; k < rec.pred_count; ++k) {
            rec.pred_indices.push_back(static_cast<int>(line.tokens[3 + k]));
        }
        doc.records.push_back(std::move(rec));
    }

    const std::size_t n = static_cast<std::size_t>(doc.task_count);
    if (doc.records.size() != n && doc.records.size() != n + 2) {
        const std::string loc = doc.source_name.empty() ? std::string("stg") : doc.source_name;
        throw MalformedRecord(loc + ": expected " + std::to_string(n) + " or " +
                              std::to_string(n + 2) + " records, got " +
                              std::to_string(doc.records.size()));
    }

    const int base = doc.has_dummies() ? 0 : doc.records.empty() ? 0 : doc.records.front().node_index;
    if (!doc.has_dummies() && base != 0 && base != 1) {
        throw MalformedRecord(doc.source_name + ": node indices must start at 0 or 1");
    }
    for (std::size_t i = 0; i < doc.records.size(); ++i) {
        if (doc.records[i].node_index != base + static_cast<int>(i)) {
            throw MalformedRecord(doc.source_name + ": node indices must be consecutive, found " +
                                  std::to_string(doc.records[i].node_index) + " at position " +
                                  std::to_string(i));
        }
    }
    if (doc.has_dummies()) {
        if (doc.records.front().proc_time != 0 || doc.records.back().proc_time != 0) {
            throw MalformedRecord(doc.source_name + ": dummy entry/exit nodes must have zero cost");
        }
    }
    return doc;
}

TaskGraph parse_stg(std::string_view text, std::string source_name) {
    const StgDocument doc = parse_stg_document(text, std::move(source_name));
    const int n = doc.task_count;
    const bool dummies = doc.has_dummies();
    const int lowest = doc.records.empty() ? 0 : doc.records.front().node_index;
    const int exit_dummy = n + 1;

    // Dense reindex of the real nodes to 1..n, preserving order. With the
    // dummy convention the real nodes are already 1..n.
    auto to_task = [&](int node_index) -> TaskId {
        if (dummies) return node_index;
        return node_index - lowest + 1;
    };

    std::vector<Task> tasks;
    std::vector<Edge> edges;
    tasks.reserve(n);
    for (const StgRecord& rec : doc.records) {
        if (dummies && (rec.node_index == 0 || rec.node_index == exit_dummy)) continue;
        const TaskId id = to_task(rec.node_index);
        tasks.push_back(Task{id, rec.proc_time});
        for (int p : rec.pred_indices) {
            if (p < (dummies ? 0 : lowest) || p > (dummies ? exit_dummy : lowest + n - 1)) {
                throw MalformedRecord(doc.source_name + ": predecessor index " +
                                      std::to_string(p) + " out of range in record " +
                                      std::to_string(rec.node_index));
            }
            if (dummies && (p == 0 || p == exit_dummy)) continue;
            edges.push_back(Edge{to_task(p), id});
        }
    }
    return TaskGraph::validate(tasks, std::move(edges));
}

TaskGraph load_stg_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_stg(buffer.str(), path.string());
}

std::string write_stg(const TaskGraph& graph) {
    const int n = graph.task_count();
    if (n == 0) {
        throw EmptyGraph("refusing to serialize a graph without tasks");
    }

    std::ostringstream out;
    out << n << '\n';
    out << "0 0 0\n";
    for (TaskId t = 1; t <= n; ++t) {
        const auto& preds = graph.predecessors(t);
        out << t << ' ' << graph.exec_time(t) << ' ' << std::max<std::size_t>(preds.size(), 1);
        if (preds.empty()) {
            out << " 0";
        } else {
            for (TaskId p : preds) out << ' ' << p;
        }
        out << '\n';
    }
    out << (n + 1) << " 0";
    std::vector<TaskId> exits;
    for (TaskId t = 1; t <= n; ++t) {
        if (graph.successors(t).empty()) exits.push_back(t);
    }
    out << ' ' << exits.size();
    for (TaskId t : exits) out << ' ' << t;
    out << '\n';
    return out.str();
}

TaskGraph figure1_graph() {
    const std::vector<Time> exec = {50, 1, 10, 20, 20, 2, 20, 1, 20, 19, 20};
    std::vector<Task> tasks;
    tasks.reserve(exec.size());
    for (std::size_t i = 0; i < exec.size(); ++i) {
        tasks.push_back(Task{static_cast<TaskId>(i + 1), exec[i]});
    }
    std::vector<Edge> edges = {
        {1, 5}, {1, 6}, {2, 7}, {3, 7}, {4, 7}, {5, 8}, {6, 9}, {6, 10}, {7, 11},
    };
    return TaskGraph::validate(tasks, std::move(edges));
}

}  // namespace dagsched
