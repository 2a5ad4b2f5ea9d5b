import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-ticket-header', template: `<p>{{ title }}</p>` })
export class TicketHeaderComponent { title = 'Ticket header'; }

@Component({ selector: 'app-ticket-footer', template: `<p>{{ title }}</p>` })
export class TicketFooterComponent { title = 'Ticket footer'; }

@Injectable({ providedIn: 'root' })
export class TicketAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}

@Injectable({ providedIn: 'root' })
export class TicketSessionService {
  run(event: string) { return event + 'session'; }
}
