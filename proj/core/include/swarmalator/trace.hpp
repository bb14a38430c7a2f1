#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmalator/agent_state.hpp"

namespace swarmalator {

/// One sampled agent state; the unit of all persisted output.
struct TraceRecord {
    double time = 0.0;
    int agent_id = 0;
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

struct TraceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Destination for sampled states.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void append(const TraceRecord& record) = 0;
};

class MemoryTraceSink final : public TraceSink {
public:
    void append(const TraceRecord& record) override { records_.push_back(record); }
    const std::vector<TraceRecord>& records() const { return records_; }
    std::vector<TraceRecord> take() { return std::move(records_); }

private:
    std::vector<TraceRecord> records_;
};

/// Streams CSV rows as they are appended; the header is written up front.
class CsvTraceSink final : public TraceSink {
public:
    explicit CsvTraceSink(std::ostream& out);
    void append(const TraceRecord& record) override;

private:
    std::ostream& out_;
};

void append_snapshot(TraceSink& sink, const SwarmSnapshot& snapshot);

/// CSV with header `time,agent_id,x,y,theta,phi`, 12 significant digits,
/// locale-independent. Values round-trip to well within 1e-9.
void write_trace(std::ostream& out, const std::vector<TraceRecord>& records);
void write_trace(const std::string& path, const std::vector<TraceRecord>& records);
std::string trace_to_csv(const std::vector<TraceRecord>& records);

/// Header-driven reader: columns may appear in any order. Malformed or
/// truncated rows raise TraceError naming the line.
std::vector<TraceRecord> read_trace(std::istream& in);
std::vector<TraceRecord> read_trace(const std::string& path);

/// Groups records into per-instant snapshots (consecutive equal times),
/// agents sorted by id within each snapshot.
std::vector<SwarmSnapshot> snapshots_from_trace(const std::vector<TraceRecord>& records);

}  // namespace swarmalator
