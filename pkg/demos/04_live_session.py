"""Play one session against the computer over the real HTTP API.

Starts the service in a background thread on a free port, creates a
session on 3R3 (the human gets the hub, the highest-degree node), plays
"keep" whenever it is our turn, and prints the final payoffs.  The same
endpoints drive the browser client in frontend/.
"""

import json
import threading
import time
import urllib.request

import uvicorn

from favornet.service import create_app


def api(method: str, url: str, body: dict | None = None) -> dict:
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(url, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1", port=8731,
                                       log_level="warning"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)
base = "http://127.0.0.1:8731"

view = api("POST", f"{base}/sessions", {"network": "3R3", "seed": 42, "timeout": 60})
sid = view["session"]
print(f"session {sid}: playing node {view['your_node']} on 3R3")

while view["status"] != "finished":
    if view["your_turn"]:
        degree = sum(1 for e in view["graph"]["edges"] if view["your_node"] in e)
        print(f"  our turn (turn #{view['your_turn_index']}, degree {degree}): keep")
        view = api("POST", f"{base}/sessions/{sid}/decision", {"action": "keep"})["view"]
    else:
        view = api("GET", f"{base}/sessions/{sid}")

print(f"finished; graph intact with {len(view['graph']['edges'])} edges")
print(f"payoffs: {view['payoffs']} (hub keeps 6 links x 100 points)")
server.should_exit = True
thread.join(timeout=5)
