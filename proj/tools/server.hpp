#pragma once

#include <httplib.h>

namespace honeycomb::cli {

/// Routes every /api/ request on `server` to handle_api.
void mount_api(httplib::Server& server);

}  // namespace honeycomb::cli
