#pragma once

#include <functional>
#include <string>

namespace xnb::log {

using Sink = std::function<void(const std::string&)>;

// Warnings go to stderr unless a different sink is installed.
void set_warning_sink(Sink sink);
void warn(const std::string& message);

// Installs a sink for the lifetime of the guard, restoring the previous one after.
class ScopedSink {
public:
    explicit ScopedSink(Sink sink);
    ~ScopedSink();
    ScopedSink(const ScopedSink&) = delete;
    ScopedSink& operator=(const ScopedSink&) = delete;

private:
    Sink previous_;
};

}  // namespace xnb::log
