#include "xnb/log.hpp"

#include <iostream>
#include <mutex>

namespace xnb::log {
namespace {

std::mutex& sink_mutex() {
    static std::mutex m;
    return m;
}

Sink& current_sink() {
    static Sink sink = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
    return sink;
}

}  // namespace

void set_warning_sink(Sink sink) {
    std::lock_guard lock(sink_mutex());
    current_sink() = std::move(sink);
}

void warn(const std::string& message) {
    std::lock_guard lock(sink_mutex());
    if (current_sink()) current_sink()(message);
}

ScopedSink::ScopedSink(Sink sink) {
    std::lock_guard lock(sink_mutex());
    previous_ = std::exchange(current_sink(), std::move(sink));
}

ScopedSink::~ScopedSink() {
    std::lock_guard lock(sink_mutex());
    current_sink() = std::move(previous_);
}

}  // namespace xnb::log
