#include "subbeaver/store.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "subbeaver/errors.hpp"

namespace subbeaver {

namespace {

std::string key_text(const Store::Key& k) {
    return "(" + k.w.compact() + ", " + k.budget_id + ", " + k.vm_id + ")";
}

}  // namespace

std::string format_record(const RunRecord& r) {
    std::string line = r.w.compact();
    line += ',';
    line += r.budget_id;
    line += ',';
    line += r.vm_id;
    line += r.halted ? ",H," : ",T,";
    line += r.output.str();
    line += ',';
    line += std::to_string(r.steps);
    return line;
}

RunRecord parse_record(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(',', start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (fields.size() != 6) throw std::invalid_argument("expected 6 comma-separated fields");
    RunRecord r;
    r.w = BitString::from_compact(fields[0]);
    if (fields[1].empty() || fields[2].empty()) throw std::invalid_argument("empty budget or vm id");
    r.budget_id = std::string(fields[1]);
    r.vm_id = std::string(fields[2]);
    if (fields[3] == "H") {
        r.halted = true;
    } else if (fields[3] != "T") {
        throw std::invalid_argument("outcome must be H or T");
    }
    r.output = parse_natural(std::string(fields[4]));
    auto steps = fields[5];
    auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), r.steps);
    if (steps.empty() || ec != std::errc{} || ptr != steps.data() + steps.size()) {
        throw std::invalid_argument("bad step count");
    }
    if (r.halted == (r.output == 0)) throw std::invalid_argument("outcome and output disagree");
    return r;
}

Store Store::load(const std::filesystem::path& file, std::ostream* warn) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw LoadError(0, "cannot open " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    Store store;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        ++line_no;
        auto end = text.find('\n', start);
        if (end == std::string::npos) {
            if (warn) {
                *warn << "warning: " << file.string() << ": dropping truncated last line " << line_no
                      << "\n";
            }
            break;
        }
        std::string_view line(text.data() + start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        RunRecord r;
        try {
            r = parse_record(line);
        } catch (const std::invalid_argument& e) {
            throw LoadError(line_no, e.what());
        }
        store.put(r);
    }
    return store;
}

Store Store::merge(std::span<const std::filesystem::path> shard_files, std::ostream* warn) {
    Store merged;
    std::optional<std::string> vm;
    for (const auto& f : shard_files) {
        Store shard = load(f, warn);
        for (const auto& [key, value] : shard.records_) {
            if (!vm) vm = key.vm_id;
            if (*vm != key.vm_id) {
                throw std::invalid_argument("cannot merge shards of different machines: " + *vm +
                                            " vs " + key.vm_id);
            }
            merged.put(RunRecord{key.w, key.budget_id, key.vm_id, value.halted, value.output,
                                 value.steps});
        }
    }
    return merged;
}

bool Store::put(const RunRecord& record) {
    Key key{record.w, record.budget_id, record.vm_id};
    Value value{record.halted, record.output, record.steps};
    auto [it, inserted] = records_.try_emplace(std::move(key), value);
    if (!inserted && !(it->second == value)) {
        throw IntegrityError("conflicting records for key " + key_text(it->first));
    }
    return inserted;
}

std::optional<RunRecord> Store::get(const BitString& w, std::string_view budget_id,
                                    std::string_view vm_id) const {
    auto it = records_.find(Key{w, std::string(budget_id), std::string(vm_id)});
    if (it == records_.end()) return std::nullopt;
    return RunRecord{w, it->first.budget_id, it->first.vm_id, it->second.halted, it->second.output,
                     it->second.steps};
}

std::vector<RunRecord> Store::records() const {
    std::vector<RunRecord> out;
    out.reserve(records_.size());
    for (const auto& [k, v] : records_) {
        out.push_back({k.w, k.budget_id, k.vm_id, v.halted, v.output, v.steps});
    }
    return out;
}

void Store::save(const std::filesystem::path& file) const {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        for (const auto& r : records()) out << format_record(r) << '\n';
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

void append_records(const std::filesystem::path& file, std::span<const RunRecord> records) {
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + file.string());
    for (const auto& r : records) out << format_record(r) << '\n';
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

std::string percent_encode(std::string_view text) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : text) {
        bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                          c == '-' || c == '_' || c == '.' || c == '~';
        if (unreserved) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(kHex[c >> 4]);
            out.push_back(kHex[c & 15]);
        }
    }
    return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::string_view budget_id,
                                 std::string_view vm_id) {
    return dir / percent_encode(vm_id) / (percent_encode(budget_id) + ".runs");
}

}  // namespace subbeaver
