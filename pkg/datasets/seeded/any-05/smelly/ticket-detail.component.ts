import { Component } from '@angular/core';
import { Ticket, Api } from './ticket.model';

@Component({
  selector: 'app-ticket-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class TicketDetailComponent {
  current: Ticket | null = null;
  constructor(private api: Api) {}

  toView(x: unknown) {
    return (x as any).name;
  }

  meta: Record<string, any> = {};

}
