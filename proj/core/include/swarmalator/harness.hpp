#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "swarmalator/net_config.hpp"
#include "swarmalator/sim_config.hpp"
#include "swarmalator/trace.hpp"

namespace swarmalator {

/// State as published on the wire: the sender's kinematic state at publish
/// time. Orientation is zeroed when the net config strips it.
struct StateMessage {
    int sender_id = 0;
    Vec2 position;
    double orientation = 0.0;
    double phase = 0.0;
    double publish_time = 0.0;
};

/// Per-agent store of the last received update from every other agent.
/// An entry is replaced only by a message with strictly newer publish time,
/// so reordered stale messages are dropped.
class NeighborCache {
public:
    struct Entry {
        StateMessage message;
        double receive_time = 0.0;
    };

    /// Returns true when the message was stored.
    bool store(const StateMessage& message, double receive_time);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Entries keyed by sender id, ascending.
    const std::map<int, Entry>& entries() const { return entries_; }

private:
    std::map<int, Entry> entries_;
};

struct NetStats {
    std::uint64_t published = 0;      // messages handed to the network
    std::uint64_t lost = 0;           // per-link drops
    std::uint64_t delivered = 0;      // messages that reached a recipient
    std::uint64_t stale_dropped = 0;  // delivered but older than the cached entry
    std::uint64_t control_updates = 0;
};

/// Discrete-event execution of the distributed semantics: agents periodically
/// publish their states over a lossy delaying network, cache the last receipt
/// per neighbour, and recompute control whenever the emulated positioning
/// service hands them a fresh position. Between control updates an agent
/// moves ballistically under its last rates (zero-order hold).
class DistributedSimulation {
public:
    DistributedSimulation(const SimConfig& sim, const NetConfig& net);
    ~DistributedSimulation();

    DistributedSimulation(const DistributedSimulation&) = delete;
    DistributedSimulation& operator=(const DistributedSimulation&) = delete;

    /// Processes the event queue up to steps*dt, sampling ground truth into
    /// `sink` on the same grid the lockstep engine uses. Returns the final
    /// ground-truth snapshot.
    SwarmSnapshot run(TraceSink& sink);

    const NeighborCache& cache(int agent_id) const;
    const NetStats& stats() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around DistributedSimulation::run.
SwarmSnapshot run_distributed(const SimConfig& sim, const NetConfig& net, TraceSink& sink);

}  // namespace swarmalator
