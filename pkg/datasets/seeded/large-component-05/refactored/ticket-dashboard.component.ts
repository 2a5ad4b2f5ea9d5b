import { Component } from '@angular/core';

@Component({
  selector: 'app-ticket-dashboard',
  template: `<app-ticket-load-panel></app-ticket-load-panel><app-ticket-log-panel></app-ticket-log-panel><app-ticket-chart-panel></app-ticket-chart-panel>`
})
export class TicketDashboardComponent {}
